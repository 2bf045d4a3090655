#pragma once

// Poincare polynomials of spaces assembled from projective spaces,
// Grassmannians, products, bundles, blow-ups and divisorial contractions.

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "mcc/ratpoly.hpp"

namespace mcc {

/// The affine expression a*r + b in the global parameter r.
struct IntExpr {
    long a = 0;
    long b = 0;

    static IntExpr constant(long c) { return {0, c}; }
    static IntExpr of_r(long a, long b) { return {a, b}; }

    long eval(long r) const noexcept { return a * r + b; }
    friend bool operator==(const IntExpr&, const IntExpr&) = default;
};

std::string to_string(const IntExpr& e);

class SpaceExpr;
using SpacePtr = std::shared_ptr<const SpaceExpr>;

namespace space {

struct Point {
    friend bool operator==(const Point&, const Point&) = default;
};
struct Proj {
    IntExpr n;
    friend bool operator==(const Proj&, const Proj&) = default;
};
/// Weighted projective space; the weights are kept for printing only.
struct WProj {
    std::vector<long> weights;
    friend bool operator==(const WProj&, const WProj&) = default;
};
/// k-planes in an n-dimensional vector space.
struct Grass {
    IntExpr k;
    IntExpr n;
    friend bool operator==(const Grass&, const Grass&) = default;
};
struct Product {
    SpacePtr left;
    SpacePtr right;
};
struct Bundle {
    SpacePtr fiber;
    SpacePtr base;
};
struct BlowUp {
    SpacePtr ambient;
    SpacePtr center;
    IntExpr codim;
};
/// Collapse of a divisor that is a P^fiber_dim-bundle (rationally) over base.
struct Contract {
    SpacePtr total;
    SpacePtr base;
    IntExpr fiber_dim;
};
struct Literal {
    RatFun value;
    friend bool operator==(const Literal&, const Literal&) = default;
};

}  // namespace space

/// Immutable description of a space. Children are shared, so copying is cheap.
class SpaceExpr {
public:
    using Node = std::variant<space::Point, space::Proj, space::WProj, space::Grass, space::Product,
                              space::Bundle, space::BlowUp, space::Contract, space::Literal>;

    explicit SpaceExpr(Node node) : node_(std::move(node)) {}

    const Node& node() const noexcept { return node_; }

    friend bool operator==(const SpaceExpr& a, const SpaceExpr& b);

private:
    Node node_;
};

SpacePtr point();
SpacePtr proj(IntExpr n);
SpacePtr wproj(std::vector<long> weights);
SpacePtr grass(IntExpr k, IntExpr n);
SpacePtr product(SpacePtr left, SpacePtr right);
SpacePtr bundle(SpacePtr fiber, SpacePtr base);
SpacePtr blowup(SpacePtr ambient, SpacePtr center, IntExpr codim);
SpacePtr contract(SpacePtr total, SpacePtr base, IntExpr fiber_dim);
SpacePtr literal(RatFun value);

/// Renders in the DSL accepted by parse_space.
std::string to_string(const SpaceExpr& s);

/// [n choose k] in q = t^2, i.e. the Poincare polynomial of Gr(k, n).
/// Throws Error(InvalidDimension) unless 0 <= k <= n.
IntPoly gaussian_binomial(long k, long n);

/// Rational Poincare polynomial of `s` with r substituted.
///
/// Weighted projective spaces count as ordinary ones of the same dimension,
/// bundles multiply, a blow-up along a center of codimension c adds
/// P(center) * (t^2 + ... + t^{2(c-1)}), and a contraction to `base` with
/// P^k fibers subtracts P(base) * (t^2 + ... + t^{2k}).
///
/// Throws Error(InvalidDimension) when a dimension is out of range at r, and
/// NotPolynomialError when a literal is not a polynomial.
IntPoly poincare(const SpaceExpr& s, long r);

/// Parses one space expression. Whitespace between tokens is ignored.
SpacePtr parse_space(std::string_view text);

/// Parses the contents of a `.msd` file: one expression, `#` starts a line
/// comment. Offsets in errors refer to the original text.
SpacePtr parse_space_file(std::string_view contents);

/// Parses a rational function in t written with integers, t, ^, *, /, +, -
/// and parentheses, e.g. `(1 - t^6)/(1 - t^2)`.
RatFun parse_ratfun(std::string_view text);

}  // namespace mcc
