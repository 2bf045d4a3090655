#include "mcc/gitwalls.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace mcc::git {

std::vector<int> weight_multiset(const RepFactor& f) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>((f.degree + 1) * std::max(f.copies, 0)));
    for (int j = 0; j <= f.degree; ++j)
        for (int c = 0; c < f.copies; ++c) out.push_back(f.degree - 2 * j);
    return out;
}

std::string_view to_string(Stability s) noexcept {
    switch (s) {
        case Stability::Stable: return "Stable";
        case Stability::StrictlySemistable: return "StrictlySemistable";
        case Stability::Unstable: return "Unstable";
    }
    return "Unknown";
}

std::size_t free_slot(const LinearizedSetup& setup) {
    std::optional<std::size_t> slot;
    for (std::size_t i = 0; i < setup.weights.size(); ++i) {
        if (setup.weights[i]) continue;
        if (slot) throw Error(ErrorKind::MultipleFreeSlots, "more than one free linearization slot");
        slot = i;
    }
    if (!slot) throw Error(ErrorKind::NoFreeSlot, "no free linearization slot");
    return *slot;
}

LinearizedSetup bind(const LinearizedSetup& setup, const Rational& lambda) {
    LinearizedSetup out = setup;
    out.weights[free_slot(setup)] = lambda;
    return out;
}

namespace {

void check_shape(const LinearizedSetup& setup) {
    if (setup.factors.empty()) throw Error(ErrorKind::InvalidArgument, "setup needs at least one factor");
    if (setup.factors.size() != setup.weights.size())
        throw Error(ErrorKind::InvalidArgument, "one linearization weight per factor is required");
    for (const auto& f : setup.factors)
        if (f.degree < 0 || f.copies < 1)
            throw Error(ErrorKind::InvalidArgument, "factors need degree >= 0 and copies >= 1");
    for (const auto& w : setup.weights)
        if (w && sgn(*w) <= 0) throw Error(ErrorKind::InvalidArgument, "linearization weights must be positive");
}

}  // namespace

std::vector<Rational> candidate_walls(const LinearizedSetup& setup) {
    check_shape(setup);
    const std::size_t slot = free_slot(setup);
    // all attainable values of sum over fixed slots of lambda_i * (d_i - 2 a_i)
    std::set<Rational> partial{Rational(0)};
    for (std::size_t i = 0; i < setup.factors.size(); ++i) {
        if (i == slot) continue;
        std::set<Rational> next;
        const int d = setup.factors[i].degree;
        for (const auto& s : partial)
            for (int a = 0; a <= d; ++a) next.insert(Rational(s + *setup.weights[i] * (d - 2 * a)));
        partial = std::move(next);
    }
    std::set<Rational> walls;
    const int d = setup.factors[slot].degree;
    for (int a = 0; a <= d; ++a) {
        const int w = d - 2 * a;
        if (w == 0) continue;
        for (const auto& s : partial) {
            Rational lambda = -s / w;
            lambda.canonicalize();
            if (sgn(lambda) > 0) walls.insert(lambda);
        }
    }
    return {walls.begin(), walls.end()};
}

namespace {

// Common vanishing data of one factor's forms, dehomogenized at z0 = 1.
struct FactorZeros {
    int degree = 0;
    // chain[c] = gcd(g, g', ..., g^(c)): its roots are the roots of g of multiplicity > c
    std::vector<IntPoly> chain;
    // common vanishing order at [0:1]
    int order_at_infinity = 0;
};

IntPoly integer_form(const std::vector<Rational>& coeffs) {
    Integer lcm = 1;
    for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out(coeffs.size());
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        Rational scaled = coeffs[j] * lcm;
        scaled.canonicalize();
        out[j] = scaled.get_num();
    }
    return IntPoly(std::move(out));
}

FactorZeros common_zeros(const BinFormTuple& tuple) {
    FactorZeros z;
    z.degree = tuple.degree;
    IntPoly g;
    int ord_inf = tuple.degree;
    bool any = false;
    for (const auto& form : tuple.forms) {
        IntPoly p = integer_form(form);
        if (p.is_zero()) continue;
        any = true;
        g = gcd(g, p);
        ord_inf = std::min(ord_inf, tuple.degree - p.degree());
    }
    if (!any) throw Error(ErrorKind::AllFormsZero, "every form of a factor is zero");
    z.order_at_infinity = ord_inf;
    z.chain.push_back(g);
    IntPoly deriv = g;
    for (int c = 1; c < tuple.degree; ++c) {
        deriv = deriv.derivative();
        z.chain.push_back(gcd(z.chain.back(), deriv));
    }
    return z;
}

std::string describe_locus(const IntPoly& roots) {
    if (roots.degree() == 1) {
        // c1 x + c0 = 0 at x = z1/z0 = -c0/c1
        Integer z0 = roots.coeff(1);
        Integer z1 = -roots.coeff(0);
        Integer g;
        mpz_gcd(g.get_mpz_t(), z0.get_mpz_t(), z1.get_mpz_t());
        z0 /= g;
        z1 /= g;
        if (z0 < 0) {
            z0 = -z0;
            z1 = -z1;
        }
        return "[" + z0.get_str() + ":" + z1.get_str() + "]";
    }
    return "roots of " + to_string(roots, "x");
}

}  // namespace

StabilityVerdict classify_point(std::span<const BinFormTuple> points, const LinearizedSetup& setup) {
    check_shape(setup);
    for (const auto& w : setup.weights)
        if (!w) throw Error(ErrorKind::InvalidArgument, "linearization has an unbound free slot");
    if (points.size() != setup.factors.size())
        throw Error(ErrorKind::DegreeMismatch, "expected " + std::to_string(setup.factors.size()) +
                                                   " factors, got " + std::to_string(points.size()));
    std::vector<FactorZeros> zeros;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& f = setup.factors[i];
        const auto& p = points[i];
        if (p.degree != f.degree)
            throw Error(ErrorKind::DegreeMismatch, "factor " + std::to_string(i) + " has degree " +
                                                       std::to_string(f.degree) + ", point has degree " +
                                                       std::to_string(p.degree));
        if (p.forms.size() != static_cast<std::size_t>(f.copies))
            throw Error(ErrorKind::DegreeMismatch, "factor " + std::to_string(i) + " needs " +
                                                       std::to_string(f.copies) + " forms, got " +
                                                       std::to_string(p.forms.size()));
        for (const auto& form : p.forms)
            if (form.size() != static_cast<std::size_t>(f.degree) + 1)
                throw Error(ErrorKind::DegreeMismatch, "a degree-" + std::to_string(f.degree) + " form needs " +
                                                           std::to_string(f.degree + 1) + " coefficients");
        zeros.push_back(common_zeros(p));
    }

    const std::size_t n = zeros.size();
    std::vector<int> profile(n, 0);
    std::optional<Witness> best;

    // mu is strictly decreasing in every order, so the minimum over realizable
    // profiles is attained at the order vector of an actual point.
    for (;;) {
        Rational mu = 0;
        for (std::size_t i = 0; i < n; ++i) mu += *setup.weights[i] * (zeros[i].degree - 2 * profile[i]);
        mu.canonicalize();
        if (!best || mu < best->mu) {
            bool at_infinity = true;
            IntPoly common;
            bool constrained = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (zeros[i].order_at_infinity < profile[i]) at_infinity = false;
                if (profile[i] == 0) continue;
                constrained = true;
                common = gcd(common, zeros[i].chain[static_cast<std::size_t>(profile[i] - 1)]);
            }
            if (!constrained) {
                best = Witness{profile, mu, "generic"};
            } else if (at_infinity) {
                best = Witness{profile, mu, "[0:1]"};
            } else if (common.degree() >= 1) {
                best = Witness{profile, mu, describe_locus(common)};
            }
        }
        std::size_t i = 0;
        while (i < n && profile[i] == zeros[i].degree) profile[i++] = 0;
        if (i == n) break;
        ++profile[i];
    }

    StabilityVerdict v;
    const int s = sgn(best->mu);
    v.cls = s > 0 ? Stability::Stable : s == 0 ? Stability::StrictlySemistable : Stability::Unstable;
    v.witness = std::move(best);
    return v;
}

std::vector<std::pair<Rational, StabilityVerdict>> wall_scan(std::span<const BinFormTuple> points,
                                                             const LinearizedSetup& setup,
                                                             std::span<const Rational> samples) {
    std::vector<std::pair<Rational, StabilityVerdict>> out;
    out.reserve(samples.size());
    for (const auto& lambda : samples) {
        if (sgn(lambda) <= 0) throw Error(ErrorKind::InvalidArgument, "lambda samples must be positive");
        out.emplace_back(lambda, classify_point(points, bind(setup, lambda)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text forms

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    bool accept(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_, word.size()) != word) return false;
        pos_ += word.size();
        return true;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    bool at_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }
    Integer digits() {
        if (!at_digit()) fail({"<int>"});
        std::size_t end = pos_;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
        Integer v(std::string(text_.substr(pos_, end - pos_)));
        pos_ = end;
        return v;
    }
    int small_int() {
        Integer v = digits();
        if (!v.fits_sint_p()) fail({"<int> in range"});
        return static_cast<int>(v.get_si());
    }
    Rational rational() {
        Integer num = digits();
        Integer den = 1;
        if (accept('/')) den = digits();
        if (den == 0) fail({"nonzero denominator"});
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    [[noreturn]] void fail(std::vector<std::string> expected) {
        skip_ws();
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw ParseError(base_ + pos_, std::move(expected), found);
    }

private:
    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

std::vector<std::pair<std::size_t, std::string_view>> split(std::string_view text, char sep, std::size_t base) {
    std::vector<std::pair<std::size_t, std::string_view>> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == sep) {
            out.emplace_back(base + start, text.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

// form := ['+'|'-'] term {('+'|'-') term} | '0'
// term := rational ['*' vars] | vars
// vars := var {'*' var},  var := ('z0' | 'z1') ['^' int]
std::vector<Rational> parse_form(std::string_view text, std::size_t base, int degree) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
    Scanner s(text, base);
    if (s.at_end()) return coeffs;
    bool negative = s.accept('-');
    if (!negative) s.accept('+');
    for (;;) {
        Rational c = 1;
        bool have_coeff = false;
        if (s.at_digit()) {
            c = s.rational();
            have_coeff = true;
        }
        int e0 = 0;
        int e1 = 0;
        bool have_var = false;
        if (!have_coeff || s.accept('*')) {
            for (;;) {
                int* slot = nullptr;
                if (s.accept("z0")) slot = &e0;
                else if (s.accept("z1")) slot = &e1;
                else s.fail({"z0", "z1"});
                int e = 1;
                if (s.accept('^')) e = s.small_int();
                *slot += e;
                have_var = true;
                if (!s.accept('*')) break;
            }
        }
        const bool zero_term = have_coeff && !have_var && sgn(c) == 0;
        if (!zero_term) {
            if (e0 + e1 != degree)
                throw Error(ErrorKind::DegreeMismatch, "monomial of degree " + std::to_string(e0 + e1) +
                                                           " in a degree-" + std::to_string(degree) + " form");
            coeffs[static_cast<std::size_t>(e1)] += negative ? Rational(-c) : c;
        }
        if (s.accept('+')) negative = false;
        else if (s.accept('-')) negative = true;
        else break;
    }
    if (!s.at_end()) s.fail({"\"+\"", "\"-\"", "\"*\"", "\";\"", "\"|\""});
    for (auto& c : coeffs) c.canonicalize();
    return coeffs;
}

}  // namespace

std::vector<BinFormTuple> parse_point(std::string_view text, std::span<const RepFactor> factors) {
    auto groups = split(text, '|', 0);
    if (groups.size() != factors.size())
        throw Error(ErrorKind::DegreeMismatch, "point has " + std::to_string(groups.size()) + " factors, setup has " +
                                                   std::to_string(factors.size()));
    std::vector<BinFormTuple> out;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        BinFormTuple tuple;
        tuple.degree = factors[i].degree;
        auto forms = split(groups[i].second, ';', groups[i].first);
        if (forms.size() > static_cast<std::size_t>(factors[i].copies))
            throw Error(ErrorKind::DegreeMismatch, "factor " + std::to_string(i) + " takes at most " +
                                                       std::to_string(factors[i].copies) + " forms");
        for (const auto& [offset, form] : forms) tuple.forms.push_back(parse_form(form, offset, tuple.degree));
        tuple.forms.resize(static_cast<std::size_t>(factors[i].copies),
                           std::vector<Rational>(static_cast<std::size_t>(tuple.degree) + 1));
        out.push_back(std::move(tuple));
    }
    return out;
}

Rational parse_rational(std::string_view text) {
    Scanner s(text);
    const bool negative = s.accept('-');
    if (!negative) s.accept('+');
    Rational q = s.rational();
    if (negative) q = -q;
    if (!s.at_end()) s.fail({"end of input"});
    return q;
}

LinearizedSetup parse_setup(std::string_view text) {
    LinearizedSetup setup;
    std::vector<bool> explicit_weight;
    bool any_free = false;
    for (const auto& [offset, group] : split(text, '|', 0)) {
        RepFactor f{-1, 1};
        std::optional<Rational> weight;
        bool marked = false;
        for (const auto& [item_offset, item] : split(group, ',', offset)) {
            Scanner s(item, item_offset);
            if (s.accept("sym")) {
                if (!s.accept(':')) s.fail({"\":\""});
                f.degree = s.small_int();
            } else if (s.accept("copies")) {
                if (!s.accept(':')) s.fail({"\":\""});
                f.copies = s.small_int();
            } else if (s.accept("lin")) {
                if (!s.accept(':')) s.fail({"\":\""});
                weight = s.rational();
                marked = true;
            } else if (s.accept("free")) {
                marked = true;
                any_free = true;
            } else {
                s.fail({"sym:", "copies:", "lin:", "free"});
            }
            if (!s.at_end()) s.fail({"\",\"", "\"|\""});
        }
        if (f.degree < 0) throw ParseError(offset, {"sym:<int>"}, "factor without sym:");
        setup.factors.push_back(f);
        setup.weights.push_back(weight);
        explicit_weight.push_back(marked);
    }
    // defaults: the last unmarked factor is free unless a slot was marked free,
    // every other unmarked factor gets weight 1
    const std::size_t n = setup.factors.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (explicit_weight[i]) continue;
        const bool make_free = !any_free && n >= 2 && i == n - 1;
        if (!make_free) setup.weights[i] = Rational(1);
    }
    check_shape(setup);
    return setup;
}

}  // namespace mcc::git
