#include "mcc/tower.hpp"

#include <algorithm>

namespace mcc::tower {

std::string_view to_string(TermKind kind) noexcept {
    return kind == TermKind::BlowUp ? "blowup" : "blowdown";
}

namespace {

// The closed forms, generic over the value type so that the same expressions
// can be assembled as rational functions or evaluated at a rational point.
template <class F>
class ClosedForms {
public:
    ClosedForms(long r, F t) : r_(r), t_(std::move(t)) {}

    F M() const {
        const long r = r_;
        F first = ratio(2 * r + 10, 6) + F(2) * (tp(4) - tp(2 * r + 4)) / (one() - tp(4));
        return first * ratio(2 * r + 2, 2) * ratio(2 * r + 2, 2) * ratio(2 * r, 4);
    }

    /// Center polynomial and exceptional factor of step `index`.
    std::pair<F, F> term(int index) const {
        const long r = r_;
        switch (index) {
            case 1:
                return {m0p1() * ratio(2 * r + 2, 2) * ratio(2 * r, 4), ex(2, 4 * r - 4)};
            case 2:
                return {(one() + tp(2) + tp(4)) * ratio(2 * r, 2) * (ratio(2 * r, 2) + ex(2, 2 * r - 2)) *
                            ratio(2 * r + 2, 2),
                        ex(2, 2 * r)};
            case 3: {
                F bracket = (one() + tp(2)) * m0p1() + tp(2) * (one() + tp(2)) * (one() + tp(2) + tp(4));
                return {bracket * ratio(2 * r - 2, 2) * ratio(2 * r + 2, 2) * ratio(2 * r, 4), ex(2, 2 * r - 2)};
            }
            case 4: {
                F bracket = ratio(2 * r, 2) * (ratio(2 * r, 2) + ex(2, 2 * r - 2)) +
                            (one() + tp(2)) * ratio(2 * r - 2, 2) * ex(2, 2 * r - 2);
                return {bracket * ratio(2 * r, 2) * ratio(2 * r + 2, 2), tp(2) + tp(4)};
            }
            case 5: {
                F p = ratio(2 * r - 2, 2);
                return {(one() + tp(2)) * p * p * ratio(2 * r + 2, 2) * ratio(2 * r, 4), ex(2, 10)};
            }
            case 6:
                return {ratio(2 * r - 2, 2) * ratio(2 * r - 4, 4) * ratio(2 * r + 2, 2) * ratio(2 * r, 4), ex(2, 16)};
            default:
                throw Error(ErrorKind::UnsupportedIndex, "tower term index must be 1..6");
        }
    }

private:
    F one() const { return F(1); }
    F tp(long e) const {
        F out(1);
        for (long i = 0; i < e; ++i) out *= t_;
        return out;
    }
    // (1 - t^a) / (1 - t^b)
    F ratio(long a, long b) const { return (one() - tp(a)) / (one() - tp(b)); }
    // (t^a - t^b) / (1 - t^2)
    F ex(long a, long b) const { return (tp(a) - tp(b)) / (one() - tp(2)); }
    // P_t(M_0(P^1, 3))
    F m0p1() const { return one() + tp(2) + F(2) * tp(4) + tp(6) + tp(8); }

    long r_;
    F t_;
};

constexpr const char* kLabels[] = {"", "Γ^1", "Γ^2_1", "Γ^3_2", "Γ^2_4", "Γ^3_5", "Γ^1_6"};

void require_r(long r, long min) {
    if (r < min)
        throw Error(ErrorKind::InvalidArgument,
                    "r must be >= " + std::to_string(min) + ", got " + std::to_string(r));
}

TermKind kind_of(int index) { return index <= 3 ? TermKind::BlowUp : TermKind::BlowDown; }

}  // namespace

RatFun poincare_M_expression(long r) {
    require_r(r, 1);
    return ClosedForms<RatFun>(r, RatFun::variable()).M();
}

IntPoly poincare_M(long r) { return to_polynomial(poincare_M_expression(r)); }

std::vector<TowerTerm> tower_terms(long r) {
    require_r(r, 3);
    ClosedForms<RatFun> forms(r, RatFun::variable());
    std::vector<TowerTerm> out;
    out.reserve(6);
    for (int i = 1; i <= 6; ++i) {
        auto [center, exceptional] = forms.term(i);
        TowerTerm term;
        term.index = i;
        term.kind = kind_of(i);
        term.literal = center * exceptional;
        term.center = std::move(center);
        term.exceptional = std::move(exceptional);
        term.center_label = kLabels[i];
        out.push_back(std::move(term));
    }
    return out;
}

TowerReport poincare_S(long r) {
    TowerReport rep;
    rep.r = r;
    rep.terms = tower_terms(r);
    rep.pM = poincare_M(r);
    RatFun total(rep.pM);
    for (const auto& term : rep.terms) {
        if (term.kind == TermKind::BlowUp) total += term.literal;
        else total -= term.literal;
    }
    rep.pS = to_polynomial(total);
    rep.degree = rep.pS.degree();
    rep.palindromic = rep.pS.is_palindromic();
    rep.pM_palindromic = rep.pM.is_palindromic();
    Rational e = rep.pS.eval(Rational(-1));
    rep.euler = e.get_num();
    rep.nonnegative = std::all_of(rep.pS.coeffs().begin(), rep.pS.coeffs().end(),
                                  [](const Integer& c) { return sgn(c) >= 0; });
    return rep;
}

Rational evaluate_closed_form(int index, long r, const Rational& t) {
    require_r(r, index == 0 ? 1 : 3);
    ClosedForms<Rational> forms(r, t);
    if (index == 0) return forms.M();
    auto [center, exceptional] = forms.term(index);
    Rational out = center * exceptional;
    out.canonicalize();
    return out;
}

TermGeometry term_geometry(int index) {
    const IntExpr r = IntExpr::of_r(1, 0);
    const IntExpr r_minus_1 = IntExpr::of_r(1, -1);
    const IntExpr r_minus_2 = IntExpr::of_r(1, -2);
    const IntExpr r_plus_1 = IntExpr::of_r(1, 1);
    const IntExpr two = IntExpr::constant(2);
    // P^{r-1} x P^{r-1} blown up along the diagonal
    auto blown_diagonal = [&] {
        return blowup(product(proj(r_minus_1), proj(r_minus_1)), proj(r_minus_1), r_minus_1);
    };
    switch (index) {
        case 1:
            // M_0(P^1, 3)-bundle over Gr(2, r+1); normal bundle O(-1)^{2r-2} on the fibers
            return {TermKind::BlowUp,
                    bundle(literal(RatFun(IntPoly{1, 0, 1, 0, 2, 0, 1, 0, 1})), grass(two, r_plus_1)),
                    IntExpr::of_r(2, -2), nullptr};
        case 2:
            // P^2_(1,2,2)-bundle over a bl(P^{r-1} x P^{r-1})-bundle over P^r
            return {TermKind::BlowUp, bundle(wproj({1, 2, 2}), bundle(blown_diagonal(), proj(r))), r, nullptr};
        case 3:
            return {TermKind::BlowUp, nullptr, r_minus_1, nullptr};
        case 4:
            return {TermKind::BlowDown,
                    bundle(blowup(blown_diagonal(), product(proj(IntExpr::constant(1)), proj(r_minus_2)), r_minus_1),
                           product(proj(r_minus_1), proj(r))),
                    two, wproj({1, 2, 2})};
        case 5:
            return {TermKind::BlowDown,
                    bundle(product(product(proj(IntExpr::constant(1)), proj(r_minus_2)), proj(r_minus_2)),
                           grass(two, r_plus_1)),
                    IntExpr::constant(4), wproj({1, 2, 2, 3, 3})};
        case 6:
            // P^7-bundle over Gr(2, r-1), itself over Gr(2, r+1)
            return {TermKind::BlowDown, bundle(grass(two, r_minus_1), grass(two, r_plus_1)), IntExpr::constant(7),
                    proj(IntExpr::constant(7))};
        default:
            throw Error(ErrorKind::UnsupportedIndex, "tower term index must be 1..6, got " + std::to_string(index));
    }
}

RatFun reconstruct_term(int index, long r) {
    require_r(r, 3);
    TermGeometry g = term_geometry(index);
    if (!g.center)
        throw Error(ErrorKind::UnsupportedIndex,
                    "term " + std::to_string(index) + " has no geometric reconstruction");
    const long k = g.exponent.eval(r);
    RatFun factor = g.kind == TermKind::BlowUp ? geo_sum(1, k) : geo_sum(1, k + 1);
    return RatFun(poincare(*g.center, r)) * factor;
}

long moduli_dimension(long r, long d) { return (r + 1) * (d + 1) - 4; }

DimensionAudit audit_dimensions(int index, long r) {
    require_r(r, 3);
    TermGeometry g = term_geometry(index);
    DimensionAudit a;
    a.ambient_dim = moduli_dimension(r);
    a.exponent = g.exponent.eval(r);
    // a compact space's Poincare polynomial has degree twice its complex dimension
    IntPoly center = g.center ? poincare(*g.center, r) : to_polynomial(tower_terms(r)[2].center);
    a.center_dim = center.degree() / 2;
    if (g.kind == TermKind::BlowUp) {
        a.consistent = a.center_dim + a.exponent == a.ambient_dim;
    } else {
        const long fiber_dim = poincare(*g.fiber, r).degree() / 2;
        a.consistent = fiber_dim == a.exponent && a.center_dim + a.exponent == a.ambient_dim - 1;
    }
    return a;
}

bool h_equals_s_check(long r, std::span<const long> table) {
    if (r != 3) throw Error(ErrorKind::UnsupportedR, "the H = S comparison is only available for r = 3");
    std::vector<Integer> coeffs(2 * table.size() - (table.empty() ? 0 : 1));
    for (std::size_t i = 0; i < table.size(); ++i) coeffs[2 * i] = table[i];
    return poincare_S(3).pS == IntPoly(std::move(coeffs));
}

}  // namespace mcc::tower
