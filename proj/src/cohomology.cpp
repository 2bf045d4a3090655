#include "mcc/cohomology.hpp"

#include <sstream>
#include <type_traits>

namespace mcc {

std::string to_string(const IntExpr& e) {
    if (e.a == 0) return std::to_string(e.b);
    std::string out = e.a == 1 ? "r" : std::to_string(e.a) + "*r";
    if (e.b > 0) out += "+" + std::to_string(e.b);
    if (e.b < 0) out += std::to_string(e.b);
    return out;
}

namespace {

bool same(const SpacePtr& a, const SpacePtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace

bool operator==(const SpaceExpr& a, const SpaceExpr& b) {
    if (a.node_.index() != b.node_.index()) return false;
    return std::visit(
        [&](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(b.node_);
            if constexpr (std::is_same_v<T, space::Product>) {
                return same(lhs.left, rhs.left) && same(lhs.right, rhs.right);
            } else if constexpr (std::is_same_v<T, space::Bundle>) {
                return same(lhs.fiber, rhs.fiber) && same(lhs.base, rhs.base);
            } else if constexpr (std::is_same_v<T, space::BlowUp>) {
                return same(lhs.ambient, rhs.ambient) && same(lhs.center, rhs.center) && lhs.codim == rhs.codim;
            } else if constexpr (std::is_same_v<T, space::Contract>) {
                return same(lhs.total, rhs.total) && same(lhs.base, rhs.base) && lhs.fiber_dim == rhs.fiber_dim;
            } else {
                return lhs == rhs;
            }
        },
        a.node_);
}

SpacePtr point() { return std::make_shared<const SpaceExpr>(space::Point{}); }
SpacePtr proj(IntExpr n) { return std::make_shared<const SpaceExpr>(space::Proj{n}); }
SpacePtr wproj(std::vector<long> weights) {
    return std::make_shared<const SpaceExpr>(space::WProj{std::move(weights)});
}
SpacePtr grass(IntExpr k, IntExpr n) { return std::make_shared<const SpaceExpr>(space::Grass{k, n}); }
SpacePtr product(SpacePtr left, SpacePtr right) {
    return std::make_shared<const SpaceExpr>(space::Product{std::move(left), std::move(right)});
}
SpacePtr bundle(SpacePtr fiber, SpacePtr base) {
    return std::make_shared<const SpaceExpr>(space::Bundle{std::move(fiber), std::move(base)});
}
SpacePtr blowup(SpacePtr ambient, SpacePtr center, IntExpr codim) {
    return std::make_shared<const SpaceExpr>(space::BlowUp{std::move(ambient), std::move(center), codim});
}
SpacePtr contract(SpacePtr total, SpacePtr base, IntExpr fiber_dim) {
    return std::make_shared<const SpaceExpr>(space::Contract{std::move(total), std::move(base), fiber_dim});
}
SpacePtr literal(RatFun value) { return std::make_shared<const SpaceExpr>(space::Literal{std::move(value)}); }

std::string to_string(const SpaceExpr& s) {
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, space::Point>) {
                return "pt";
            } else if constexpr (std::is_same_v<T, space::Proj>) {
                return "P(" + to_string(n.n) + ")";
            } else if constexpr (std::is_same_v<T, space::WProj>) {
                std::string out = "WP(";
                for (std::size_t i = 0; i < n.weights.size(); ++i)
                    out += (i ? "," : "") + std::to_string(n.weights[i]);
                return out + ")";
            } else if constexpr (std::is_same_v<T, space::Grass>) {
                return "Gr(" + to_string(n.k) + "," + to_string(n.n) + ")";
            } else if constexpr (std::is_same_v<T, space::Product>) {
                return "prod(" + to_string(*n.left) + "," + to_string(*n.right) + ")";
            } else if constexpr (std::is_same_v<T, space::Bundle>) {
                return "bundle(fiber=" + to_string(*n.fiber) + ",base=" + to_string(*n.base) + ")";
            } else if constexpr (std::is_same_v<T, space::BlowUp>) {
                return "blowup(" + to_string(*n.ambient) + ",center=" + to_string(*n.center) +
                       ",codim=" + to_string(n.codim) + ")";
            } else if constexpr (std::is_same_v<T, space::Contract>) {
                return "contract(" + to_string(*n.total) + ",base=" + to_string(*n.base) +
                       ",fiberdim=" + to_string(n.fiber_dim) + ")";
            } else {
                return "lit(" + to_string(n.value) + ")";
            }
        },
        s.node());
}

IntPoly gaussian_binomial(long k, long n) {
    if (k < 0 || k > n)
        throw Error(ErrorKind::InvalidDimension,
                    "Gr(" + std::to_string(k) + "," + std::to_string(n) + ") needs 0 <= k <= n");
    // After step i the running value is [n-k+i choose i]_q, so every division is exact.
    IntPoly acc = IntPoly::constant(1);
    for (long i = 1; i <= k; ++i) {
        const auto up = static_cast<std::size_t>(2 * (n - k + i));
        const auto down = static_cast<std::size_t>(2 * i);
        acc *= IntPoly::constant(1) - IntPoly::monomial(1, up);
        acc = acc.divide_exact(IntPoly::constant(1) - IntPoly::monomial(1, down));
    }
    return acc;
}

namespace {

long checked(const IntExpr& e, long r, long min, const char* what) {
    const long v = e.eval(r);
    if (v < min)
        throw Error(ErrorKind::InvalidDimension, std::string(what) + " = " + to_string(e) + " evaluates to " +
                                                     std::to_string(v) + " at r=" + std::to_string(r) +
                                                     ", needs >= " + std::to_string(min));
    return v;
}

IntPoly projective(long n) { return to_polynomial(geo_sum(0, n + 1)); }

}  // namespace

IntPoly poincare(const SpaceExpr& s, long r) {
    return std::visit(
        [r](const auto& n) -> IntPoly {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, space::Point>) {
                return IntPoly::constant(1);
            } else if constexpr (std::is_same_v<T, space::Proj>) {
                return projective(checked(n.n, r, 0, "projective dimension"));
            } else if constexpr (std::is_same_v<T, space::WProj>) {
                if (n.weights.empty()) throw Error(ErrorKind::InvalidDimension, "WP() needs at least one weight");
                for (long w : n.weights)
                    if (w <= 0) throw Error(ErrorKind::InvalidDimension, "WP weights must be positive");
                return projective(static_cast<long>(n.weights.size()) - 1);
            } else if constexpr (std::is_same_v<T, space::Grass>) {
                return gaussian_binomial(n.k.eval(r), n.n.eval(r));
            } else if constexpr (std::is_same_v<T, space::Product>) {
                return poincare(*n.left, r) * poincare(*n.right, r);
            } else if constexpr (std::is_same_v<T, space::Bundle>) {
                return poincare(*n.fiber, r) * poincare(*n.base, r);
            } else if constexpr (std::is_same_v<T, space::BlowUp>) {
                const long c = checked(n.codim, r, 1, "blow-up codimension");
                return poincare(*n.ambient, r) + poincare(*n.center, r) * to_polynomial(geo_sum(1, c));
            } else if constexpr (std::is_same_v<T, space::Contract>) {
                const long k = checked(n.fiber_dim, r, 1, "contraction fiber dimension");
                return poincare(*n.total, r) - poincare(*n.base, r) * to_polynomial(geo_sum(1, k + 1));
            } else {
                return to_polynomial(n.value);
            }
        },
        s.node());
}

}  // namespace mcc
