#pragma once

// Betti numbers of the Simpson compactification S of rational cubics in P^r,
// obtained from the Kontsevich space M = M_0(P^r, 3) by three blow-ups
// followed by three blow-downs.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "mcc/cohomology.hpp"
#include "mcc/ratpoly.hpp"

namespace mcc::tower {

enum class TermKind { BlowUp, BlowDown };

std::string_view to_string(TermKind kind) noexcept;

/// One modification in the tower, with the closed form evaluated at r.
struct TowerTerm {
    int index = 0;  // 1..6
    TermKind kind = TermKind::BlowUp;
    /// Poincare polynomial of the center (blow-up) or of the base of the
    /// contracted divisor (blow-down).
    RatFun center;
    /// t^2 + ... + t^{2(c-1)} for a blow-up of codimension c, or
    /// t^2 + ... + t^{2k} for contracted P^k fibers.
    RatFun exceptional;
    /// center * exceptional: what the step adds (blow-up) or removes (blow-down).
    RatFun literal;
    std::string center_label;
};

struct TowerReport {
    long r = 0;
    IntPoly pM;
    std::vector<TowerTerm> terms;
    IntPoly pS;
    int degree = 0;
    bool palindromic = false;
    /// P_S(-1), the topological Euler characteristic.
    Integer euler;
    bool nonnegative = false;
    bool pM_palindromic = false;
};

/// Betti numbers of S for r = 3, as tabulated for the Hilbert scheme of
/// twisted cubics: coefficients of t^0, t^2, ..., t^24.
inline constexpr std::array<long, 13> kTwistedCubicBetti = {1, 2, 6, 10, 16, 19, 22, 19, 16, 10, 6, 2, 1};

/// The closed form for P_t(M) at r, unreduced until the final conversion.
RatFun poincare_M_expression(long r);

/// P_t(M). Requires r >= 1.
IntPoly poincare_M(long r);

/// The six modification terms at r. Requires r >= 3.
std::vector<TowerTerm> tower_terms(long r);

/// P_t(M) + (terms 1..3) - (terms 4..6), with the derived checks filled in.
/// Requires r >= 3. A non-polynomial total raises NotPolynomialError.
TowerReport poincare_S(long r);

/// The same seven closed forms evaluated directly at a rational t, factor by
/// factor, without forming any polynomial. index 0 is P_t(M), 1..6 the terms
/// (unsigned).
Rational evaluate_closed_form(int index, long r, const Rational& t);

/// Geometric description of a tower step in terms of the space DSL.
struct TermGeometry {
    TermKind kind = TermKind::BlowUp;
    /// Center (blow-up) or base of the contracted divisor (blow-down);
    /// null for term 3, which is carried only as a closed form.
    SpacePtr center;
    /// Codimension of the center for a blow-up, fiber dimension for a
    /// blow-down.
    IntExpr exponent;
    /// Fiber of the contracted divisor (blow-downs only).
    SpacePtr fiber;
};

TermGeometry term_geometry(int index);

/// P(center) * exceptional factor, built from term_geometry. Throws
/// Error(UnsupportedIndex) for index 3 and for indices outside 1..6.
RatFun reconstruct_term(int index, long r);

/// Dimension bookkeeping for one step: a blow-up center of dimension d and
/// codimension c must satisfy d + c = dim M, a contracted divisor with base of
/// dimension d and P^k fibers must satisfy d + k = dim M - 1.
struct DimensionAudit {
    long ambient_dim = 0;
    long center_dim = 0;
    long exponent = 0;
    bool consistent = false;
};

DimensionAudit audit_dimensions(int index, long r);

/// Complex dimension of M_0(P^r, d): (r+1)(d+1) - 4.
long moduli_dimension(long r, long d = 3);

/// Compares P_t(S) at r = 3 with a coefficient table indexed by t^{2i}.
/// Throws Error(UnsupportedR) for any other r.
bool h_equals_s_check(long r, std::span<const long> table = kTwistedCubicBetti);

}  // namespace mcc::tower
