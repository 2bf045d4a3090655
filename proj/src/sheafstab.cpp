#include "mcc/sheafstab.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace mcc::sheaf {

HilbPoly1D make_hilb(std::int64_t a, std::int64_t b) {
    if (a < 1) throw Error(ErrorKind::InvalidArgument, "Hilbert polynomial needs leading coefficient >= 1");
    return {a, b};
}

std::string to_string(const HilbPoly1D& h) {
    std::string out = h.a == 1 ? "m" : std::to_string(h.a) + "m";
    if (h.b > 0) out += "+" + std::to_string(h.b);
    if (h.b < 0) out += std::to_string(h.b);
    return out;
}

std::string to_string(const LineSum& s) {
    std::string out = "line:[";
    for (std::size_t i = 0; i < s.twists.size(); ++i) out += (i ? "," : "") + std::to_string(s.twists[i]);
    return out + "]";
}

std::string_view to_string(Stability s) noexcept {
    switch (s) {
        case Stability::Stable: return "Stable";
        case Stability::StrictlySemistable: return "StrictlySemistable";
        case Stability::Unstable: return "Unstable";
    }
    return "Unknown";
}

HilbPoly1D hilb_line_sum(const std::vector<std::int64_t>& twists) {
    HilbPoly1D h{static_cast<std::int64_t>(twists.size()), 0};
    for (auto a : twists) h.b += a + 1;
    return h;
}

void validate(const SheafModel& model) {
    if (const auto* sum = std::get_if<LineSum>(&model)) {
        if (sum->twists.empty()) throw Error(ErrorKind::InvalidArgument, "a line sum needs at least one summand");
        if (sum->twists.size() > 20) throw Error(ErrorKind::InvalidArgument, "at most 20 summands are supported");
        return;
    }
    const auto& abs = std::get<Abstract>(model);
    if (abs.hilb.a < 1) throw Error(ErrorKind::InvalidArgument, "sheaf multiplicity must be >= 1");
    for (const auto& q : abs.quotients) {
        if (q.a < 1 || q.a > abs.hilb.a)
            throw Error(ErrorKind::InvalidArgument, "quotient " + to_string(q) + " must have multiplicity in 1.." +
                                                        std::to_string(abs.hilb.a));
        if (q == abs.hilb) throw Error(ErrorKind::InvalidArgument, "a quotient must differ from the sheaf");
    }
}

LineSum hn_first(const LineSum& sum) {
    if (sum.twists.empty()) throw Error(ErrorKind::InvalidArgument, "a line sum needs at least one summand");
    const auto [lo, hi] = std::minmax_element(sum.twists.begin(), sum.twists.end());
    if (*lo == *hi) throw Error(ErrorKind::AlreadySemistable, to_string(sum) + " is already semistable");
    LineSum out;
    for (auto a : sum.twists)
        if (a == *hi) out.twists.push_back(a);
    return out;
}

namespace {

Stability compare(const Rational& sheaf_slope, const std::optional<Rational>& min_quotient_slope) {
    if (!min_quotient_slope || *min_quotient_slope > sheaf_slope) return Stability::Stable;
    if (*min_quotient_slope == sheaf_slope) return Stability::StrictlySemistable;
    return Stability::Unstable;
}

}  // namespace

SheafVerdict classify(const SheafModel& model) {
    validate(model);
    SheafVerdict v;
    if (const auto* sum = std::get_if<LineSum>(&model)) {
        const std::size_t n = sum->twists.size();
        const HilbPoly1D whole = hilb_line_sum(sum->twists);
        std::optional<Rational> best;
        // projection onto every nonempty proper subset of summands
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<std::int64_t> kept;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) kept.push_back(sum->twists[i]);
            const HilbPoly1D q = hilb_line_sum(kept);
            if (!best || q.slope() < *best) {
                best = q.slope();
                v.minimal_quotient = q;
            }
        }
        v.cls = compare(whole.slope(), best);
        if (v.cls == Stability::Unstable) {
            v.destabilizing_summands = hn_first(*sum);
            v.destabilizer = hilb_line_sum(v.destabilizing_summands->twists);
        }
        return v;
    }
    const auto& abs = std::get<Abstract>(model);
    std::optional<Rational> best;
    for (const auto& q : abs.quotients) {
        if (!best || q.slope() < *best) {
            best = q.slope();
            v.minimal_quotient = q;
        }
    }
    v.cls = compare(abs.hilb.slope(), best);
    if (v.cls == Stability::Unstable) {
        const HilbPoly1D kernel{abs.hilb.a - v.minimal_quotient->a, abs.hilb.b - v.minimal_quotient->b};
        if (kernel.a >= 1) v.destabilizer = kernel;
    }
    return v;
}

// ---------------------------------------------------------------------------
// Monomial ideals

MonomialIdeal::MonomialIdeal(int nvars, std::vector<std::vector<int>> generators) : nvars_(nvars) {
    if (nvars < 1) throw Error(ErrorKind::InvalidArgument, "need at least one variable");
    for (const auto& g : generators) {
        if (g.size() != static_cast<std::size_t>(nvars))
            throw Error(ErrorKind::InvalidArgument, "generator length must equal the number of variables");
        if (std::any_of(g.begin(), g.end(), [](int e) { return e < 0; }))
            throw Error(ErrorKind::InvalidArgument, "exponents must be nonnegative");
    }
    auto divides = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
            redundant = j != i && divides(generators[j], generators[i]);
        if (!redundant) gens_.push_back(generators[i]);
    }
}

namespace {

void check_generators(const MonomialIdeal& ideal) {
    for (const auto& g : ideal.generators())
        if (std::all_of(g.begin(), g.end(), [](int e) { return e == 0; }))
            throw Error(ErrorKind::ZeroQuotient, "the ideal contains 1");
    if (ideal.generators().size() > kMaxGenerators)
        throw Error(ErrorKind::InvalidArgument,
                    "inclusion-exclusion is limited to " + std::to_string(kMaxGenerators) + " generators");
}

// (signed count, lcm degree) for every subset of generators
template <class Visit>
void for_each_lcm(const MonomialIdeal& ideal, Visit&& visit) {
    const auto& gens = ideal.generators();
    const std::size_t g = gens.size();
    std::vector<int> lcm(static_cast<std::size_t>(ideal.nvars()));
    for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
        std::fill(lcm.begin(), lcm.end(), 0);
        int parity = 0;
        for (std::size_t i = 0; i < g; ++i) {
            if (!(mask & (1u << i))) continue;
            ++parity;
            for (std::size_t v = 0; v < lcm.size(); ++v) lcm[v] = std::max(lcm[v], gens[i][v]);
        }
        visit(parity % 2 ? -1 : 1, std::accumulate(lcm.begin(), lcm.end(), 0L));
    }
}

Integer binomial(long n, long k) {
    if (k < 0 || n < k) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

using QPoly = std::vector<Rational>;

QPoly multiply(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

HilbertResult hilb_monomial(const MonomialIdeal& ideal) {
    check_generators(ideal);
    const int n = ideal.nvars();
    std::vector<Integer> num_coeffs;
    for_each_lcm(ideal, [&](int sign, long degree) {
        if (num_coeffs.size() <= static_cast<std::size_t>(degree)) num_coeffs.resize(static_cast<std::size_t>(degree) + 1);
        num_coeffs[static_cast<std::size_t>(degree)] += sign;
    });
    IntPoly numerator(std::move(num_coeffs));
    const IntPoly one_minus_q{1, -1};
    int removed = 0;
    IntPoly reduced;
    while (removed < n && numerator.try_divide_exact(one_minus_q, reduced)) {
        numerator = std::move(reduced);
        ++removed;
    }
    HilbertResult out;
    out.dimension = n - removed - 1;
    out.numerator = numerator;
    if (out.dimension < 0) return out;

    // HP(m) = sum_j K_j * C(m - j + d, d), C(x + d, d) = prod_{i=1..d} (x + i) / d!
    const int d = out.dimension;
    Integer factorial = 1;
    for (int i = 2; i <= d; ++i) factorial *= i;
    QPoly hp(static_cast<std::size_t>(d) + 1);
    const auto coeffs = numerator.coeffs();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (sgn(coeffs[j]) == 0) continue;
        QPoly term{Rational(coeffs[j], factorial)};
        term[0].canonicalize();
        for (int i = 1; i <= d; ++i) term = multiply(term, QPoly{Rational(i - static_cast<long>(j)), Rational(1)});
        for (std::size_t k = 0; k < term.size(); ++k) hp[k] += term[k];
    }
    for (auto& c : hp) c.canonicalize();
    while (!hp.empty() && sgn(hp.back()) == 0) hp.pop_back();
    out.polynomial = std::move(hp);
    return out;
}

Integer hilbert_function(const MonomialIdeal& ideal, long m) {
    check_generators(ideal);
    const long n = ideal.nvars();
    Integer total = 0;
    for_each_lcm(ideal, [&](int sign, long degree) {
        if (m >= degree) total += sign * binomial(m - degree + n - 1, n - 1);
    });
    return total;
}

std::string polynomial_in_m(const std::vector<Rational>& coeffs) {
    std::string out;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        const Rational& c = coeffs[k];
        if (sgn(c) == 0) continue;
        const Rational mag = abs(c);
        if (!out.empty()) out += sgn(c) < 0 ? "-" : "+";
        else if (sgn(c) < 0) out += "-";
        const bool integral = mag.get_den() == 1;
        if (k == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += integral ? mag.get_str() : "(" + mag.get_str() + ")";
        out += "m";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Text forms

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool accept(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_, word.size()) != word) return false;
        pos_ += word.size();
        return true;
    }
    bool at_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }
    std::int64_t number() {
        if (!at_digit()) fail({"<int>"});
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > 100000000000000LL) fail({"<int> in range"});
            v = v * 10 + (text_[pos_++] - '0');
        }
        return v;
    }
    std::int64_t signed_number() {
        const bool neg = accept('-');
        if (!neg) accept('+');
        const std::int64_t v = number();
        return neg ? -v : v;
    }
    std::size_t pos() const noexcept { return pos_; }

    [[noreturn]] void fail(std::vector<std::string> expected) {
        skip_ws();
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw ParseError(pos_, std::move(expected), found);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

HilbPoly1D hilb(Scanner& s) {
    std::int64_t a = 1;
    if (s.at_digit()) a = s.number();
    s.accept('*');
    if (!s.accept('m')) s.fail({"m"});
    std::int64_t b = 0;
    if (s.accept('+')) b = s.number();
    else if (s.accept('-')) b = -s.number();
    if (a < 1) s.fail({"positive multiplicity"});
    return {a, b};
}

}  // namespace

HilbPoly1D parse_hilb(std::string_view text) {
    Scanner s(text);
    HilbPoly1D h = hilb(s);
    if (!s.at_end()) s.fail({"end of input"});
    return h;
}

SheafModel parse_sheaf(std::string_view text) {
    Scanner s(text);
    if (s.accept("line:")) {
        LineSum sum;
        if (!s.accept('[')) s.fail({"\"[\""});
        if (!s.accept(']')) {
            do sum.twists.push_back(s.signed_number());
            while (s.accept(','));
            if (!s.accept(']')) s.fail({"\",\"", "\"]\""});
        }
        if (!s.at_end()) s.fail({"end of input"});
        SheafModel model = std::move(sum);
        validate(model);
        return model;
    }
    if (s.accept("abs:")) {
        Abstract abs;
        abs.hilb = hilb(s);
        if (s.accept(';')) {
            if (!s.accept("quot:")) s.fail({"quot:"});
            if (!s.at_end()) {
                do abs.quotients.push_back(hilb(s));
                while (s.accept(','));
            }
        }
        if (!s.at_end()) s.fail({"\";\"", "\",\"", "end of input"});
        SheafModel model = std::move(abs);
        validate(model);
        return model;
    }
    s.fail({"line:", "abs:"});
}

MonomialIdeal parse_ideal(std::string_view text, int nvars) {
    if (nvars < 1) throw Error(ErrorKind::InvalidArgument, "--vars must be >= 1");
    Scanner s(text);
    std::vector<std::vector<int>> gens;
    if (s.at_end()) return MonomialIdeal(nvars, {});
    do {
        std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
        if (s.at_digit()) {
            const std::size_t at = s.pos();
            if (s.number() != 1) throw ParseError(at, {"1", "x<i>"}, "a coefficient");
        } else {
            do {
                if (!s.accept('x')) s.fail({"x<i>"});
                const std::size_t at = s.pos();
                const std::int64_t v = s.number();
                if (v >= nvars)
                    throw ParseError(at, {"variable index below " + std::to_string(nvars)}, "x" + std::to_string(v));
                std::int64_t e = 1;
                if (s.accept('^')) e = s.number();
                exps[static_cast<std::size_t>(v)] += static_cast<int>(e);
            } while (s.accept('*'));
        }
        gens.push_back(std::move(exps));
    } while (s.accept(','));
    if (!s.at_end()) s.fail({"\",\"", "\"*\"", "end of input"});
    return MonomialIdeal(nvars, std::move(gens));
}

}  // namespace mcc::sheaf
