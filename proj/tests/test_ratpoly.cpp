#include <random>

#include "doctest.h"
#include "mcc/ratpoly.hpp"

using namespace mcc;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_degree, int bound) {
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-bound, bound);
    std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("IntPoly basics") {
    const IntPoly p{1, 0, 2, 0, -1};
    CHECK(p.degree() == 4);
    CHECK(to_string(p) == "1 + 2*t^2 - t^4");
    CHECK(IntPoly{}.degree() == -1);
    CHECK(IntPoly{0, 0, 0}.is_zero());
    CHECK(p.derivative() == IntPoly{0, 4, 0, -4});
    CHECK(IntPoly{1, 2, 6, 2, 1}.is_palindromic());
    CHECK_FALSE(IntPoly{1, 2, 3}.is_palindromic());
    CHECK(IntPoly{6, 4, 2}.content() == 2);
}

TEST_CASE("exact division over Z") {
    const IntPoly f{1, 0, 0, 0, 0, 0, -1};  // 1 - t^6
    CHECK(f.divide_exact(IntPoly{1, 0, -1}) == IntPoly{1, 0, 1, 0, 1});
    IntPoly q;
    CHECK_FALSE(IntPoly{1, 1}.try_divide_exact(IntPoly{2}, q));
    CHECK_THROWS_AS((void)f.divide_exact(IntPoly{}), Error);
}

TEST_CASE("gcd of polynomials") {
    const IntPoly a = IntPoly{1, 1} * IntPoly{1, 0, 1};
    const IntPoly b = IntPoly{1, 1} * IntPoly{2, 3};
    CHECK(gcd(a, b) == IntPoly{1, 1});
    CHECK(gcd(IntPoly{1, 0, 1}, IntPoly{1, 1}) == IntPoly{1});
}

TEST_CASE("RatFun canonical form") {
    const RatFun f(IntPoly{1, 0, -1}, IntPoly{2, 2});  // (1 - t^2)/(2 + 2t) = (1 - t)/2
    CHECK(f.num() == IntPoly{1, -1});
    CHECK(f.den() == IntPoly{2});
    CHECK_FALSE(f.is_polynomial());
    CHECK_THROWS_AS(to_polynomial(f), NotPolynomialError);

    const RatFun neg(IntPoly{1}, IntPoly{-1, 0, 1});
    CHECK(sgn(neg.den().leading()) > 0);
    CHECK_THROWS_AS(RatFun(IntPoly{1}, IntPoly{}), Error);
    CHECK_THROWS_AS(RatFun(1) / RatFun(0), Error);
}

TEST_CASE("geometric sums") {
    CHECK(to_polynomial(geo_sum(0, 3)) == IntPoly{1, 0, 1, 0, 1});
    CHECK(geo_sum(2, 2).is_zero());
    CHECK_THROWS_AS(geo_sum(3, 1), Error);
    // the closed form (t^{2lo} - t^{2hi}) / (1 - t^2) against the literal sum
    for (long lo = 0; lo <= 20; ++lo)
        for (long hi = lo; hi <= 20; ++hi) {
            std::vector<Integer> c(static_cast<std::size_t>(2 * hi + 1));
            for (long i = lo; i < hi; ++i) c[static_cast<std::size_t>(2 * i)] = 1;
            const RatFun closed = RatFun(IntPoly::monomial(1, 2 * lo) - IntPoly::monomial(1, 2 * hi), IntPoly{1, 0, -1});
            CHECK(closed == RatFun(IntPoly(c)));
            CHECK(geo_sum(lo, hi) == closed);
        }
}

TEST_CASE("evaluation commutes with arithmetic") {
    std::mt19937 rng(20240517);
    std::uniform_int_distribution<int> small(-7, 7), pos(1, 7);
    for (int iter = 0; iter < 200; ++iter) {
        const IntPoly a = random_poly(rng, 5, 9), b = random_poly(rng, 4, 9), c = random_poly(rng, 3, 9);
        if (b.is_zero() || c.is_zero()) continue;
        const RatFun f(a, b), g(c);
        const Rational x(small(rng), pos(rng));
        if (sgn(b.eval(x)) == 0 || sgn(c.eval(x)) == 0 || sgn(f.den().eval(x)) == 0) continue;
        const Rational fx = eval_rational(f, x), gx = eval_rational(g, x);
        CHECK(eval_rational(f + g, x) == fx + gx);
        CHECK(eval_rational(f - g, x) == fx - gx);
        CHECK(eval_rational(f * g, x) == fx * gx);
        CHECK(eval_rational(f / g, x) == fx / gx);
        CHECK(fx == a.eval(x) / b.eval(x));
        // product then exact division returns the factor
        CHECK((a * c).divide_exact(c) == a);
        CHECK(f * g / g == f);
    }
}

TEST_CASE("pole detection") {
    const RatFun f(IntPoly{1}, IntPoly{-1, 1});
    CHECK_THROWS_AS(eval_rational(f, Rational(1)), Error);
    CHECK(eval_rational(f, Rational(3)) == Rational(1, 2));
}

TEST_CASE("powers") {
    const RatFun f(IntPoly{1, 1});
    CHECK(to_polynomial(pow(f, 3)) == IntPoly{1, 3, 3, 1});
    CHECK(pow(f, 0) == RatFun(1));
}
