#pragma once

// Brute-force reference computations. None of these share code paths with
// the engine they are used to check.

#include <utility>
#include <vector>

#include "mcc/gitwalls.hpp"
#include "mcc/ratpoly.hpp"

namespace mcc::oracle {

/// sum over k-subsets of {1..n} of t^(2 * inversions of the 0/1 word).
IntPoly inversion_binomial(int k, int n);

/// Number of degree-m monomials in nvars variables divisible by no generator.
long standard_monomials(const std::vector<std::vector<int>>& generators, int nvars, int m);

/// Vanishing order at [a:b] of the binary form with coefficients c_j of
/// z0^{d-j} z1^j, read off the Taylor expansion along a transverse line.
/// Returns d + 1 for the zero form.
int order_at(const std::vector<Rational>& form, const Integer& a, const Integer& b);

/// Minimum of sum_i lambda_i (d_i - 2 ord_p) over the listed points p and a
/// generic point. Exact when every common root is among `candidates`.
Rational min_mu(std::span<const git::BinFormTuple> points, std::span<const Rational> weights,
                const std::vector<std::pair<Integer, Integer>>& candidates);

}  // namespace mcc::oracle
