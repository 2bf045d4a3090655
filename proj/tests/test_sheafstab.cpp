#include <algorithm>
#include <random>

#include "doctest.h"
#include "mcc/sheafstab.hpp"
#include "mcc/verify/oracles.hpp"

using namespace mcc;
using namespace mcc::sheaf;

TEST_CASE("Hilbert polynomials of line sums") {
    CHECK(hilb_line_sum({0, -1, -1}) == HilbPoly1D{3, 1});
    CHECK(hilb_line_sum({0}) == HilbPoly1D{1, 1});
    CHECK(hilb_line_sum({0, -1}) == HilbPoly1D{2, 1});
    CHECK(to_string(HilbPoly1D{3, 1}) == "3m+1");
    CHECK(to_string(HilbPoly1D{1, 0}) == "m");
    CHECK(to_string(HilbPoly1D{2, -3}) == "2m-3");

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> tw(-4, 4), len(1, 6);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<std::int64_t> a(static_cast<std::size_t>(len(rng))), b(static_cast<std::size_t>(len(rng)));
        for (auto& x : a) x = tw(rng);
        for (auto& x : b) x = tw(rng);
        auto shuffled = a;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(hilb_line_sum(shuffled) == hilb_line_sum(a));
        auto joined = a;
        joined.insert(joined.end(), b.begin(), b.end());
        const auto ha = hilb_line_sum(a), hb = hilb_line_sum(b);
        CHECK(hilb_line_sum(joined) == HilbPoly1D{ha.a + hb.a, ha.b + hb.b});
    }
}

TEST_CASE("stability of the standard cubic sheaves") {
    const auto oc = classify(Abstract{{3, 1}, {{1, 1}, {2, 1}}});
    CHECK(oc.cls == Stability::Stable);
    REQUIRE(oc.minimal_quotient);
    CHECK(*oc.minimal_quotient == HilbPoly1D{2, 1});

    const auto split = classify(LineSum{{0, -1, -1}});
    CHECK(split.cls == Stability::Unstable);
    REQUIRE(split.destabilizing_summands);
    CHECK(*split.destabilizing_summands == LineSum{{0}});
    REQUIRE(split.destabilizer);
    CHECK(*split.destabilizer == HilbPoly1D{1, 1});

    CHECK(classify(Abstract{{3, 1}, {{1, 0}}}).cls == Stability::Unstable);

    const auto ext = classify(Abstract{{3, 1}, {{1, 0}, {1, 1}}});
    CHECK(ext.cls == Stability::Unstable);
    REQUIRE(ext.destabilizer);
    CHECK(*ext.destabilizer == HilbPoly1D{2, 1});
}

TEST_CASE("Harder-Narasimhan first term") {
    CHECK(hn_first(LineSum{{0, -1, -1}}) == LineSum{{0}});
    CHECK(hn_first(LineSum{{2, 2, -1}}) == LineSum{{2, 2}});
    CHECK_THROWS_AS(hn_first(LineSum{{0, 0, 0}}), Error);
}

TEST_CASE("line sum classification property") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> tw(-3, 3), len(1, 7);
    for (int iter = 0; iter < 300; ++iter) {
        LineSum s;
        s.twists.resize(static_cast<std::size_t>(len(rng)));
        for (auto& x : s.twists) x = tw(rng);
        const bool all_equal = std::adjacent_find(s.twists.begin(), s.twists.end(), std::not_equal_to<>()) ==
                               s.twists.end();
        const auto v = classify(s);
        if (!all_equal) CHECK(v.cls == Stability::Unstable);
        else if (s.twists.size() == 1) CHECK(v.cls == Stability::Stable);
        else CHECK(v.cls == Stability::StrictlySemistable);
    }
}

TEST_CASE("slope comparison is scale invariant") {
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> lead(1, 4), cst(-5, 5), nq(0, 3);
    for (int iter = 0; iter < 200; ++iter) {
        Abstract base{{lead(rng) + 1, cst(rng)}, {}};
        const int n = nq(rng);
        for (int i = 0; i < n; ++i) {
            std::uniform_int_distribution<int> qa(1, static_cast<int>(base.hilb.a));
            HilbPoly1D q{qa(rng), cst(rng)};
            if (q == base.hilb) continue;
            base.quotients.push_back(q);
        }
        const auto expected = classify(base).cls;
        for (int k = 2; k <= 3; ++k) {
            Abstract scaled{{k * base.hilb.a, k * base.hilb.b}, {}};
            for (const auto& q : base.quotients) scaled.quotients.push_back({k * q.a, k * q.b});
            CHECK(classify(scaled).cls == expected);
        }
    }
}

TEST_CASE("model validation") {
    CHECK_THROWS_AS(validate(Abstract{{2, 1}, {{3, 0}}}), Error);
    CHECK_THROWS_AS(validate(Abstract{{2, 1}, {{2, 1}}}), Error);
    CHECK_THROWS_AS(validate(LineSum{{}}), Error);
    CHECK_THROWS_AS(make_hilb(0, 1), Error);
}

TEST_CASE("monomial ideals") {
    const auto thick = hilb_monomial(MonomialIdeal(4, {{0, 0, 2, 0}, {0, 0, 1, 1}, {0, 0, 0, 2}}));
    CHECK(thick.dimension == 1);
    CHECK(polynomial_in_m(thick.polynomial) == "3m+1");

    const auto triple = hilb_monomial(MonomialIdeal(3, {{3, 0, 0}}));
    CHECK(triple.dimension == 1);
    CHECK(polynomial_in_m(triple.polynomial) == "3m");

    const auto dbl = hilb_monomial(MonomialIdeal(3, {{2, 0, 0}}));
    CHECK(polynomial_in_m(dbl.polynomial) == "2m+1");

    const auto line = hilb_monomial(MonomialIdeal(2, {}));
    CHECK(line.dimension == 1);
    CHECK(polynomial_in_m(line.polynomial) == "m+1");

    // r = 5 thickened line: x2^2, x2*x3, x3^2, x4, x5
    const auto ideal = parse_ideal("x2^2, x2*x3, x3^2, x4, x5", 6);
    CHECK(polynomial_in_m(hilb_monomial(ideal).polynomial) == "3m+1");

    CHECK_THROWS_AS(hilb_monomial(MonomialIdeal(3, {{0, 0, 0}})), Error);
    CHECK_THROWS_AS(parse_ideal("x4", 3), Error);
    CHECK_THROWS_AS(parse_ideal("x0^", 3), ParseError);
    // a generator dividing another is dropped
    CHECK(MonomialIdeal(3, {{2, 0, 0}, {3, 1, 0}}).generators().size() == 1);
}

TEST_CASE("Hilbert polynomial agrees with brute-force counts") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> nv(2, 4), ng(0, 4), ex(0, 3);
    int checked = 0;
    for (int iter = 0; iter < 150; ++iter) {
        const int n = nv(rng);
        std::vector<std::vector<int>> gens(static_cast<std::size_t>(ng(rng)), std::vector<int>(static_cast<std::size_t>(n)));
        for (auto& g : gens)
            for (auto& e : g) e = ex(rng);
        gens.erase(std::remove_if(gens.begin(), gens.end(),
                                  [](const auto& g) { return std::all_of(g.begin(), g.end(), [](int e) { return e == 0; }); }),
                   gens.end());
        const MonomialIdeal ideal(n, gens);
        const auto res = hilb_monomial(ideal);
        // lcm degrees bound where h(m) and HP(m) agree
        int reg = 0;
        for (unsigned mask = 1; mask < (1u << gens.size()); ++mask) {
            std::vector<int> l(static_cast<std::size_t>(n));
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (mask >> i & 1u)
                    for (std::size_t v = 0; v < l.size(); ++v) l[v] = std::max(l[v], gens[i][v]);
            int d = 0;
            for (int e : l) d += e;
            reg = std::max(reg, d);
        }
        for (int m = 0; m <= reg + 10; ++m) {
            const long brute = oracle::standard_monomials(gens, n, m);
            CHECK(hilbert_function(ideal, m) == brute);
            if (m < reg) continue;
            Rational hp = 0, power = 1;
            for (const auto& c : res.polynomial) {
                hp += c * power;
                power *= m;
            }
            CHECK(hp == brute);
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("sheaf text syntax") {
    const auto line = parse_sheaf("line:[0,-1,-1]");
    REQUIRE(std::holds_alternative<LineSum>(line));
    CHECK(std::get<LineSum>(line) == LineSum{{0, -1, -1}});
    const auto abs = parse_sheaf("abs:3m+1;quot:m+1,2m+1");
    REQUIRE(std::holds_alternative<Abstract>(abs));
    CHECK(std::get<Abstract>(abs).hilb == HilbPoly1D{3, 1});
    CHECK(std::get<Abstract>(abs).quotients.size() == 2);
    CHECK(parse_hilb("m") == HilbPoly1D{1, 0});
    CHECK(parse_hilb("2m-3") == HilbPoly1D{2, -3});
    CHECK_THROWS_AS(parse_sheaf("line:[0,"), ParseError);
    CHECK_THROWS_AS(parse_sheaf("abs:3m+1;quot:4m"), Error);
}
