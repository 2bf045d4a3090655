#pragma once

// Slope stability of one-dimensional sheaves from their Hilbert polynomials,
// and Hilbert polynomials of projective monomial ideals.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mcc/ratpoly.hpp"

namespace mcc::sheaf {

/// The linear Hilbert polynomial a*m + b of a one-dimensional sheaf, a >= 1.
struct HilbPoly1D {
    std::int64_t a = 1;
    std::int64_t b = 0;

    /// Reduced slope b/a.
    Rational slope() const {
        Rational q(b, a);
        q.canonicalize();
        return q;
    }
    friend bool operator==(const HilbPoly1D&, const HilbPoly1D&) = default;
};

HilbPoly1D make_hilb(std::int64_t a, std::int64_t b);

/// "3m+1", "m", "2m-1".
std::string to_string(const HilbPoly1D& h);

/// O_L(a_1) + ... + O_L(a_n) on a line L.
struct LineSum {
    std::vector<std::int64_t> twists;
    friend bool operator==(const LineSum&, const LineSum&) = default;
};

/// A pure sheaf together with the nontrivial pure quotients to test against.
struct Abstract {
    HilbPoly1D hilb;
    std::vector<HilbPoly1D> quotients;
};

using SheafModel = std::variant<LineSum, Abstract>;

/// Validates the model invariants; throws Error(InvalidArgument).
void validate(const SheafModel& model);

/// "line:[0,-1,-1]".
std::string to_string(const LineSum& s);

/// sum_i (m + a_i + 1).
HilbPoly1D hilb_line_sum(const std::vector<std::int64_t>& twists);

enum class Stability { Stable, StrictlySemistable, Unstable };

std::string_view to_string(Stability s) noexcept;

struct SheafVerdict {
    Stability cls = Stability::Stable;
    /// Quotient of least reduced slope (absent when there are no quotients).
    std::optional<HilbPoly1D> minimal_quotient;
    /// Destabilizing subsheaf when unstable: the maximal-twist summands of a
    /// line sum, or the kernel of the minimal quotient of an abstract sheaf.
    std::optional<HilbPoly1D> destabilizer;
    std::optional<LineSum> destabilizing_summands;
};

/// Compares reduced slopes of the sheaf and its declared quotients. A line
/// sum is tested against all of its projection quotients.
SheafVerdict classify(const SheafModel& model);

/// First term of the Harder-Narasimhan filtration of a split sum on a line:
/// the summands of maximal twist. Throws AlreadySemistable when all twists agree.
LineSum hn_first(const LineSum& sum);

/// A monomial ideal in nvars homogeneous variables, generators kept reduced
/// (no generator divides another).
class MonomialIdeal {
public:
    MonomialIdeal(int nvars, std::vector<std::vector<int>> generators);

    int nvars() const noexcept { return nvars_; }
    const std::vector<std::vector<int>>& generators() const noexcept { return gens_; }

private:
    int nvars_;
    std::vector<std::vector<int>> gens_;
};

inline constexpr std::size_t kMaxGenerators = 20;

struct HilbertResult {
    /// Dimension of the projective scheme; -1 when the quotient has finite length.
    int dimension = -1;
    /// Hilbert polynomial in m, ascending coefficients.
    std::vector<Rational> polynomial;
    /// Numerator K(q) of the reduced Hilbert series K(q) / (1-q)^(dimension+1).
    IntPoly numerator;
};

/// Hilbert series of S/I by inclusion-exclusion over generator subsets,
/// reduced to K(q)/(1-q)^(d+1) with K(1) != 0, and the Hilbert polynomial.
/// Throws ZeroQuotient when 1 is in I, InvalidArgument past kMaxGenerators.
HilbertResult hilb_monomial(const MonomialIdeal& ideal);

/// dim_k (S/I)_m from the same inclusion-exclusion, valid for every m >= 0.
Integer hilbert_function(const MonomialIdeal& ideal, long m);

/// Renders an ascending coefficient list in m as "3m+1", "1/2m^2+3/2m+1".
std::string polynomial_in_m(const std::vector<Rational>& coeffs);

/// "x2^2, x2*x3, x3^2" with variables x0..x{nvars-1}.
MonomialIdeal parse_ideal(std::string_view text, int nvars);

/// "line:[0,-1,-1]" or "abs:3m+1;quot:m+1,2m+1".
SheafModel parse_sheaf(std::string_view text);

HilbPoly1D parse_hilb(std::string_view text);

}  // namespace mcc::sheaf
