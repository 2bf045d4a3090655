#include <random>

#include "doctest.h"
#include "mcc/cohomology.hpp"
#include "mcc/verify/oracles.hpp"

using namespace mcc;

namespace {

// Expressions without Contract or Literal; every dimension stays valid for r >= 1.
SpacePtr random_space(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 6 : 2), small(0, 3);
    switch (pick(rng)) {
        case 0: return point();
        case 1: return proj(IntExpr{small(rng) % 2, small(rng)});
        case 2: {
            const int k = small(rng);
            return grass(IntExpr{0, k}, IntExpr{1, k});  // Gr(k, r+k)
        }
        case 3: return product(random_space(rng, depth - 1), random_space(rng, depth - 1));
        case 4: return bundle(random_space(rng, depth - 1), random_space(rng, depth - 1));
        case 5: return wproj(std::vector<long>(static_cast<std::size_t>(small(rng)) + 1, 2));
        default:
            return blowup(random_space(rng, depth - 1), random_space(rng, depth - 1), IntExpr{0, small(rng) + 1});
    }
}

}  // namespace

TEST_CASE("combinator examples") {
    CHECK(poincare(*proj(IntExpr{0, 2}), 5) == IntPoly{1, 0, 1, 0, 1});
    CHECK(poincare(*grass(IntExpr{0, 2}, IntExpr{0, 4}), 1) == IntPoly{1, 0, 1, 0, 2, 0, 1, 0, 1});
    CHECK(poincare(*blowup(proj(IntExpr{0, 2}), point(), IntExpr{0, 2}), 1) == IntPoly{1, 0, 2, 0, 1});
    CHECK(poincare(*wproj({1, 2, 2}), 1) == IntPoly{1, 0, 1, 0, 1});
    CHECK(poincare(*contract(literal(RatFun(IntPoly{1, 0, 2, 0, 1})), point(), IntExpr{0, 1}), 1) ==
          IntPoly{1, 0, 1, 0, 1});
}

TEST_CASE("gaussian binomials") {
    CHECK(gaussian_binomial(2, 4) == IntPoly{1, 0, 1, 0, 2, 0, 1, 0, 1});
    CHECK(gaussian_binomial(0, 7) == IntPoly{1});
    CHECK(gaussian_binomial(2, 5 - 1) == IntPoly{1, 0, 1, 0, 2, 0, 1, 0, 1});
    CHECK_THROWS_AS(gaussian_binomial(3, 2), Error);
    CHECK_THROWS_AS(gaussian_binomial(-1, 2), Error);
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            const IntPoly g = gaussian_binomial(k, n);
            CHECK(g == gaussian_binomial(n - k, n));
            CHECK(g.is_palindromic());
            CHECK(g.degree() == 2 * k * (n - k));
            CHECK(g == oracle::inversion_binomial(k, n));
        }
    for (int n = 0; n <= 8; ++n)
        CHECK(poincare(*grass(IntExpr{0, 1}, IntExpr{0, n + 1}), 1) == poincare(*proj(IntExpr{0, n}), 1));
}

TEST_CASE("random expressions: products, nonnegativity, blow-down inverse") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> rr(1, 6), cc(2, 5);
    for (int iter = 0; iter < 300; ++iter) {
        const SpacePtr a = random_space(rng, 4), b = random_space(rng, 4);
        const long r = rr(rng);
        const IntPoly pa = poincare(*a, r), pb = poincare(*b, r);
        CHECK(poincare(*product(a, b), r) == pa * pb);
        for (const auto& c : pa.coeffs()) CHECK(sgn(c) >= 0);
        CHECK(pa.coeff(0) == 1);

        const long c = cc(rng);
        const auto up = blowup(a, b, IntExpr{0, c});
        CHECK(poincare(*contract(up, b, IntExpr{0, c - 1}), r) == pa);

        CHECK(*parse_space(to_string(*a)) == *a);
    }
}

TEST_CASE("parser") {
    CHECK(*parse_space("P(2)") == *proj(IntExpr{0, 2}));
    const auto diag = proj(IntExpr{1, -1});
    CHECK(*parse_space("blowup(prod(P(r-1),P(r-1)), center=P(r-1), codim=r-1)") ==
          *blowup(product(diag, diag), diag, IntExpr{1, -1}));
    CHECK(*parse_space("WP(1,2,2,3,3)") == *wproj({1, 2, 2, 3, 3}));
    CHECK(*parse_space(" bundle( fiber = WP(1,2,2) , base = Gr(2, r+1) ) ") ==
          *bundle(wproj({1, 2, 2}), grass(IntExpr{0, 2}, IntExpr{1, 1})));
    CHECK(*parse_space("contract(pt,base=pt,fiberdim=2*r-3)") == *contract(point(), point(), IntExpr{2, -3}));
    CHECK(poincare(*parse_space("lit((1-t^6)/(1-t^2))"), 1) == IntPoly{1, 0, 1, 0, 1});
    CHECK(*parse_space_file("# a comment\nP(r) # trailing\n") == *proj(IntExpr{1, 0}));
    CHECK(to_string(IntExpr{2, -3}) == "2*r-3");
}

TEST_CASE("parse errors carry offsets") {
    try {
        (void)parse_space("P(");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
        CHECK(e.kind() == ErrorKind::ParseError);
    }
    try {
        (void)parse_space("prod(P(1),Q(2))");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 10);
    }
    CHECK_THROWS_AS(parse_space("P(1) extra"), ParseError);
    CHECK_THROWS_AS(parse_space(""), ParseError);
}

TEST_CASE("evaluation-time dimension checks") {
    CHECK_THROWS_AS(poincare(*proj(IntExpr{1, -3}), 1), Error);
    CHECK_THROWS_AS(poincare(*grass(IntExpr{0, 3}, IntExpr{1, 0}), 2), Error);
    // a contraction removing more than was there leaves negative Betti numbers
    // but is still a polynomial; a non-polynomial literal is rejected
    CHECK_THROWS_AS(poincare(*literal(RatFun(IntPoly{1}, IntPoly{1, -1})), 1), NotPolynomialError);
}
