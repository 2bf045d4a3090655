#pragma once

// Hilbert-Mumford analysis for SL(2) acting on products of projectivized
// spaces of binary-form tuples, P(Sym^d C^2 (x) C^k), with linearization
// O(lambda_1, ..., lambda_n).

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcc/ratpoly.hpp"

namespace mcc::git {

/// Sym^degree(C^2) tensored with a trivial space of dimension `copies`.
struct RepFactor {
    int degree = 0;
    int copies = 1;
    friend bool operator==(const RepFactor&, const RepFactor&) = default;
};

/// Torus weights {d, d-2, ..., -d}, each repeated `copies` times, descending.
std::vector<int> weight_multiset(const RepFactor& f);

/// Factors with one linearization weight each. A disengaged weight marks the
/// free slot that carries the wall-crossing parameter lambda.
struct LinearizedSetup {
    std::vector<RepFactor> factors;
    std::vector<std::optional<Rational>> weights;
};

/// Index of the single free slot. Throws NoFreeSlot / MultipleFreeSlots.
std::size_t free_slot(const LinearizedSetup& setup);

/// Copy of `setup` with the free slot set to `lambda`.
LinearizedSetup bind(const LinearizedSetup& setup, const Rational& lambda);

/// Every lambda > 0 at which some choice of vanishing orders a_i in 0..d_i
/// gives sum_i lambda_i (d_i - 2 a_i) = 0, sorted ascending. These contain
/// the genuine walls.
std::vector<Rational> candidate_walls(const LinearizedSetup& setup);

/// A point of P(Sym^d C^2 (x) C^k): k binary forms of degree d. forms[i][j]
/// is the coefficient of z0^{d-j} z1^j.
struct BinFormTuple {
    int degree = 0;
    std::vector<std::vector<Rational>> forms;
};

enum class Stability { Stable, StrictlySemistable, Unstable };

std::string_view to_string(Stability s) noexcept;

/// The minimizing one-parameter subgroup: common vanishing orders of each
/// factor at a point p of P^1, and mu = sum_i lambda_i (d_i - 2 ord_p).
struct Witness {
    std::vector<int> orders;
    Rational mu;
    /// "[0:1]", "[a:b]" for a rational point, or "roots of <poly in x>"
    /// where x = z1/z0.
    std::string locus;
};

struct StabilityVerdict {
    Stability cls = Stability::Stable;
    /// Present for every verdict; for Stable it records where mu is smallest.
    std::optional<Witness> witness;
};

/// Exact Hilbert-Mumford classification: mu is minimized over all p in P^1
/// by scanning vanishing-order profiles and deciding each one with gcds of
/// derivative chains. Throws DegreeMismatch when the tuples do not fit the
/// factors, AllFormsZero for a zero tuple, and InvalidArgument for an
/// unbound or nonpositive weight.
StabilityVerdict classify_point(std::span<const BinFormTuple> points, const LinearizedSetup& setup);

/// classify_point at each lambda in `samples`, in order.
std::vector<std::pair<Rational, StabilityVerdict>> wall_scan(std::span<const BinFormTuple> points,
                                                             const LinearizedSetup& setup,
                                                             std::span<const Rational> samples);

/// Parses "z0^3; z0^2*z1 | z1" against the given factors: `|` separates
/// factors, `;` separates forms. Coefficients are integers or p/q; each
/// monomial must have the factor's degree. Missing trailing forms are zero.
std::vector<BinFormTuple> parse_point(std::string_view text, std::span<const RepFactor> factors);

/// Parses "sym:3,copies:2|sym:1,copies:4". A factor may carry `lin:p/q`;
/// without it the first factor has weight 1 and the last factor is free.
/// `free` marks a factor as the free slot explicitly.
LinearizedSetup parse_setup(std::string_view text);

Rational parse_rational(std::string_view text);

}  // namespace mcc::git
