#include "mcc/verify/oracles.hpp"

#include <algorithm>

namespace mcc::oracle {

IntPoly inversion_binomial(int k, int n) {
    std::vector<Integer> counts(static_cast<std::size_t>(2 * k * std::max(n - k, 0) + 1));
    if (k < 0 || k > n) return {};
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((mask >> i & 1u) && !(mask >> j & 1u)) ++inv;
        counts[static_cast<std::size_t>(2 * inv)] += 1;
    }
    return IntPoly(std::move(counts));
}

namespace {

void compositions(int nvars, int m, std::vector<int>& cur, const std::vector<std::vector<int>>& gens, long& count) {
    if (static_cast<int>(cur.size()) == nvars - 1) {
        cur.push_back(m);
        bool divisible = false;
        for (const auto& g : gens) {
            bool d = true;
            for (int v = 0; v < nvars && d; ++v) d = g[static_cast<std::size_t>(v)] <= cur[static_cast<std::size_t>(v)];
            divisible = divisible || d;
        }
        if (!divisible) ++count;
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= m; ++e) {
        cur.push_back(e);
        compositions(nvars, m - e, cur, gens, count);
        cur.pop_back();
    }
}

}  // namespace

long standard_monomials(const std::vector<std::vector<int>>& generators, int nvars, int m) {
    long count = 0;
    std::vector<int> cur;
    compositions(nvars, m, cur, generators, count);
    return count;
}

int order_at(const std::vector<Rational>& form, const Integer& a, const Integer& b) {
    const int d = static_cast<int>(form.size()) - 1;
    // transverse direction (u, v) = (-b, a); expand f(a + s u, b + s v) in s
    const Rational u(-b), v(a);
    std::vector<Rational> series(static_cast<std::size_t>(d) + 1);
    auto expand = [](const Rational& base, const Rational& slope, int e) {
        std::vector<Rational> out{Rational(1)};
        for (int i = 0; i < e; ++i) {
            std::vector<Rational> next(out.size() + 1);
            for (std::size_t k = 0; k < out.size(); ++k) {
                next[k] += out[k] * base;
                next[k + 1] += out[k] * slope;
            }
            out = std::move(next);
        }
        return out;
    };
    for (int j = 0; j <= d; ++j) {
        if (sgn(form[static_cast<std::size_t>(j)]) == 0) continue;
        auto p0 = expand(Rational(a), u, d - j);
        auto p1 = expand(Rational(b), v, j);
        for (std::size_t x = 0; x < p0.size(); ++x)
            for (std::size_t y = 0; y < p1.size(); ++y) series[x + y] += form[static_cast<std::size_t>(j)] * p0[x] * p1[y];
    }
    for (int k = 0; k <= d; ++k)
        if (sgn(series[static_cast<std::size_t>(k)]) != 0) return k;
    return d + 1;
}

Rational min_mu(std::span<const git::BinFormTuple> points, std::span<const Rational> weights,
                const std::vector<std::pair<Integer, Integer>>& candidates) {
    Rational generic = 0;
    for (std::size_t i = 0; i < points.size(); ++i) generic += weights[i] * points[i].degree;
    Rational best = generic;
    for (const auto& [a, b] : candidates) {
        Rational mu = 0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            int ord = points[i].degree;
            for (const auto& f : points[i].forms) {
                const int o = order_at(f, a, b);
                if (o <= points[i].degree) ord = std::min(ord, o);
            }
            mu += weights[i] * (points[i].degree - 2 * ord);
        }
        if (mu < best) best = mu;
    }
    best.canonicalize();
    return best;
}

}  // namespace mcc::oracle
