#include "mcc/verify/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <sstream>

#include "mcc/cohomology.hpp"
#include "mcc/gitwalls.hpp"
#include "mcc/sheafstab.hpp"
#include "mcc/verify/oracles.hpp"

namespace mcc::acceptance {

namespace {

// A criterion body returns an empty string on success, otherwise the reason.
using Body = std::function<std::string()>;

IntPoly even_poly(const std::vector<long>& table) {
    std::vector<Integer> coeffs(table.empty() ? 0 : 2 * table.size() - 1);
    for (std::size_t i = 0; i < table.size(); ++i) coeffs[2 * i] = table[i];
    return IntPoly(std::move(coeffs));
}

std::string check_sweep_entry(long r) {
    std::ostringstream why;
    const IntPoly pM = tower::poincare_M(r);
    const tower::TowerReport rep = tower::poincare_S(r);
    auto nonneg = [](const IntPoly& p) {
        return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const Integer& c) { return sgn(c) >= 0; });
    };
    const int deg = static_cast<int>(8 * r);
    if (pM.degree() != deg) why << " deg P(M)=" << pM.degree();
    if (pM.coeff(0) != 1) why << " P(M)(0)!=1";
    if (!nonneg(pM)) why << " P(M) has a negative coefficient";
    if (rep.degree != deg) why << " deg P(S)=" << rep.degree;
    if (rep.pS.coeff(0) != 1) why << " P(S)(0)!=1";
    if (!rep.nonnegative) why << " P(S) has a negative coefficient";
    if (!rep.palindromic) why << " P(S) not palindromic";
    std::string s = why.str();
    return s.empty() ? s : "r=" + std::to_string(r) + ":" + s;
}

std::vector<std::pair<std::string, Body>> criteria(const Options& o) {
    const long rmax = o.rmax;
    const long rterm = std::min<long>(rmax, 8);
    std::vector<std::pair<std::string, Body>> out;

    out.emplace_back("r=3 exactness", [&o] {
        const IntPoly expected = even_poly(o.reference);
        const IntPoly got = tower::poincare_S(3).pS;
        if (got == expected) return std::string();
        return "got " + to_string(got) + ", expected " + to_string(expected);
    });

    out.emplace_back("r=3 degree, palindrome, Euler characteristic", [] {
        const auto rep = tower::poincare_S(3);
        std::ostringstream why;
        if (rep.degree != 24) why << " degree " << rep.degree;
        if (!rep.palindromic) why << " not palindromic";
        if (rep.euler != 130) why << " euler " << rep.euler;
        if (rep.pS.coeff(0) != 1) why << " constant term " << rep.pS.coeff(0);
        return why.str();
    });

    out.emplace_back("polynomiality sweep r=3.." + std::to_string(rmax), [rmax] {
        std::vector<std::future<std::string>> jobs;
        for (long r = 3; r <= rmax; ++r) jobs.push_back(std::async(std::launch::async, check_sweep_entry, r));
        std::string why;
        for (auto& j : jobs) {
            std::string s = j.get();
            if (!s.empty()) why += (why.empty() ? "" : "; ") + s;
        }
        return why;
    });

    out.emplace_back("term reconstruction r=3.." + std::to_string(rterm), [rterm] {
        std::string why;
        for (long r = 3; r <= rterm; ++r) {
            const auto terms = tower::tower_terms(r);
            for (int i : {1, 2, 4, 5, 6})
                if (!(tower::reconstruct_term(i, r) == terms[static_cast<std::size_t>(i - 1)].literal))
                    why += " term " + std::to_string(i) + " at r=" + std::to_string(r);
        }
        return why;
    });

    out.emplace_back("P_t(M) at r=1", [] {
        const IntPoly anchor{1, 0, 1, 0, 2, 0, 1, 0, 1};
        std::string why;
        const IntPoly m1 = tower::poincare_M(1);
        if (!(m1 == anchor)) why += " P(M)|r=1 = " + to_string(m1);
        // the fiber factor of the first blow-up center is P_t(M_0(P^1, 3))
        const auto first = tower::tower_terms(3).front();
        const RatFun fiber = first.center / RatFun(gaussian_binomial(2, 4));
        if (!(fiber == RatFun(m1))) why += " term-1 fiber factor = " + to_string(fiber);
        return why;
    });

    out.emplace_back("GIT candidate walls and wall crossing", [] {
        std::string why;
        for (int k = 1; k <= 5; ++k) {
            git::LinearizedSetup s{{{3, 2}, {1, k}}, {Rational(1), std::nullopt}};
            auto walls = git::candidate_walls(s);
            if (walls != std::vector<Rational>{Rational(1), Rational(3)})
                why += " [Sym3x2, Sym1x" + std::to_string(k) + "] walls differ";
        }
        git::LinearizedSetup conic{{{1, 1}, {2, 2}}, {Rational(1), std::nullopt}};
        if (git::candidate_walls(conic) != std::vector<Rational>{Rational(1, 2)}) why += " [Sym1x1, Sym2x2] walls differ";

        git::LinearizedSetup s{{{3, 2}, {1, 1}}, {Rational(1), std::nullopt}};
        const auto point = git::parse_point("z0^3; z0^2*z1 | z1", s.factors);
        const std::vector<Rational> samples{Rational(1, 2), Rational(1), Rational(2), Rational(3), Rational(4)};
        const std::vector<git::Stability> expected{git::Stability::Unstable, git::Stability::StrictlySemistable,
                                                   git::Stability::Stable, git::Stability::StrictlySemistable,
                                                   git::Stability::Unstable};
        const auto scan = git::wall_scan(point, s, samples);
        for (std::size_t i = 0; i < scan.size(); ++i)
            if (scan[i].second.cls != expected[i])
                why += " lambda=" + to_string(scan[i].first) + " gave " + std::string(git::to_string(scan[i].second.cls));
        return why;
    });

    out.emplace_back("sheaf stability oracle", [] {
        using namespace sheaf;
        std::string why;
        auto lemma = classify(Abstract{{3, 1}, {{1, 1}, {2, 1}}});
        if (lemma.cls != Stability::Stable) why += " O_C model not stable";
        auto split = classify(LineSum{{0, -1, -1}});
        if (split.cls != Stability::Unstable || !split.destabilizer || !(*split.destabilizer == HilbPoly1D{1, 1}))
            why += " O_L+O_L(-1)^2 destabilizer is not m+1";
        auto ext = classify(Abstract{{3, 1}, {{1, 0}, {1, 1}}});
        if (ext.cls != Stability::Unstable || !ext.destabilizer || !(*ext.destabilizer == HilbPoly1D{2, 1}))
            why += " F+O_L(-1) destabilizer is not 2m+1";
        return why;
    });

    out.emplace_back("monomial Hilbert polynomials", [] {
        struct Case {
            int nvars;
            std::vector<std::vector<int>> gens;
            std::vector<Rational> hp;
        };
        const std::vector<Case> cases{
            {4, {{0, 0, 2, 0}, {0, 0, 1, 1}, {0, 0, 0, 2}}, {Rational(1), Rational(3)}},
            {3, {{3, 0, 0}}, {Rational(0), Rational(3)}},
            {3, {{2, 0, 0}}, {Rational(1), Rational(2)}},
        };
        std::string why;
        for (const auto& c : cases) {
            sheaf::MonomialIdeal ideal(c.nvars, c.gens);
            const auto res = sheaf::hilb_monomial(ideal);
            std::vector<Rational> hp = res.polynomial;
            hp.resize(2);
            if (res.dimension != 1 || hp != c.hp) {
                why += " got " + sheaf::polynomial_in_m(res.polynomial);
                continue;
            }
            int reg = 0;
            for (const auto& g : ideal.generators()) {
                int d = 0;
                for (int e : g) d += e;
                reg = std::max(reg, d);
            }
            for (int m = 0; m <= 10; ++m) {
                const long count = oracle::standard_monomials(c.gens, c.nvars, m);
                if (sheaf::hilbert_function(ideal, m) != count) why += " h(" + std::to_string(m) + ") mismatch";
                if (m >= reg && hp[0] + hp[1] * m != count) why += " HP(" + std::to_string(m) + ") mismatch";
            }
        }
        return why;
    });

    out.emplace_back("Gaussian binomials vs inversion counts", [] {
        std::string why;
        for (int n = 0; n <= 8; ++n)
            for (int k = 0; k <= n; ++k)
                if (!(gaussian_binomial(k, n) == oracle::inversion_binomial(k, n)))
                    why += " (" + std::to_string(k) + "," + std::to_string(n) + ")";
        return why;
    });

    out.emplace_back("term-by-term numeric guard r=3.." + std::to_string(rterm), [rterm] {
        std::string why;
        for (long r = 3; r <= rterm; ++r) {
            const IntPoly pS = tower::poincare_S(r).pS;
            for (const Rational& t : {Rational(1, 2), Rational(2), Rational(3)}) {
                Rational sum = tower::evaluate_closed_form(0, r, t);
                for (int i = 1; i <= 6; ++i) {
                    const Rational v = tower::evaluate_closed_form(i, r, t);
                    if (i <= 3) sum += v;
                    else sum -= v;
                }
                sum.canonicalize();
                if (sum != pS.eval(t)) why += " r=" + std::to_string(r) + " t=" + to_string(t);
            }
        }
        return why;
    });

    return out;
}

// Runtime ceilings per criterion, in seconds.
double time_limit(std::size_t index) {
    switch (index) {
        case 0: return 1.0;
        case 2: return 10.0;
        default: return 30.0;
    }
}

}  // namespace

std::vector<CriterionResult> run(const Options& options) {
    if (options.rmax < 3) throw Error(ErrorKind::InvalidArgument, "--rmax must be >= 3");
    std::vector<CriterionResult> results;
    auto list = criteria(options);
    for (std::size_t i = 0; i < list.size(); ++i) {
        CriterionResult res;
        res.id = "A" + std::to_string(i + 1);
        res.title = list[i].first;
        const auto start = std::chrono::steady_clock::now();
        try {
            res.detail = list[i].second();
            res.pass = res.detail.empty();
        } catch (const std::exception& e) {
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (res.pass && res.seconds > time_limit(i)) {
            res.pass = false;
            res.detail = "exceeded " + std::to_string(time_limit(i)) + " s";
        }
        results.push_back(std::move(res));
    }
    return results;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS " : "FAIL ") << r.id << (r.id.size() < 3 ? "  " : " ") << r.title;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << " (" << r.seconds << " s)";
    if (!r.pass) os << ":" << (r.detail.front() == ' ' ? "" : " ") << r.detail;
    return os.str();
}

}  // namespace mcc::acceptance
