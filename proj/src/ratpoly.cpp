#include "mcc/ratpoly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace mcc {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
    if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "leading coefficient of zero polynomial");
    return coeffs_.back();
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (sgn(leading()) < 0) g = -g;
    IntPoly out = *this;
    for (auto& c : out.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return out;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    acc.canonicalize();
    return acc;
}

bool IntPoly::is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

bool IntPoly::try_divide_exact(const IntPoly& divisor, IntPoly& quotient) const {
    if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    if (is_zero()) {
        quotient = {};
        return true;
    }
    if (degree() < divisor.degree()) return false;
    std::vector<Integer> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    const Integer& lc = divisor.coeffs_.back();
    std::vector<Integer> q(rem.size() - dd);
    Integer step;
    for (std::size_t k = q.size(); k-- > 0;) {
        Integer& top = rem[k + dd];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return false;
        mpz_divexact(step.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= step * divisor.coeffs_[j];
        q[k] = step;
    }
    for (const auto& c : rem)
        if (sgn(c) != 0) return false;
    quotient = IntPoly(std::move(q));
    return true;
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    IntPoly q;
    if (!try_divide_exact(divisor, q))
        throw Error(ErrorKind::InvalidArgument,
                    "inexact division of " + to_string(*this) + " by " + to_string(divisor));
    return q;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly& IntPoly::operator*=(const Integer& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    trim();
    return *this;
}

IntPoly operator-(IntPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[t].
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
    const int db = b.degree();
    const Integer& lb = b.leading();
    std::vector<Integer> r(a.coeffs().begin(), a.coeffs().end());
    int dr = a.degree();
    int steps = dr - db + 1;
    while (dr >= db && dr >= 0) {
        Integer lr = r[dr];
        for (auto& c : r) c *= lb;
        for (int j = 0; j <= db; ++j) r[dr - db + j] -= lr * b.coeff(j);
        --steps;
        // the leading slot is now zero; skip any further zeros
        while (dr >= 0 && sgn(r[dr]) == 0) --dr;
    }
    IntPoly out(std::move(r));
    if (steps > 0) {
        Integer scale;
        mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
        out *= scale;
    }
    return out;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPoly u = a.primitive_part();
    IntPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        if (v.degree() == 0) return IntPoly::constant(1);
        IntPoly r = pseudo_remainder(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

std::string to_string(const IntPoly& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto coeffs = p.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Integer& c = coeffs[i];
        if (sgn(c) == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << var;
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RatFun

RatFun::RatFun(const IntPoly& p) : num_(p), den_(IntPoly::constant(1)) {}

RatFun::RatFun(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
    if (num.is_zero()) {
        num_ = {};
        den_ = IntPoly::constant(1);
        return;
    }
    IntPoly n = num;
    IntPoly d = den;
    if (d.degree() > 0 && n.degree() > 0) {
        IntPoly g = gcd(n, d);
        if (g.degree() > 0) {
            n = n.divide_exact(g);
            d = d.divide_exact(g);
        }
    }
    Integer c = n.content();
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), d.content().get_mpz_t());
    if (sgn(d.leading()) < 0) c = -c;
    if (c != 1) {
        IntPoly qn, qd;
        n.try_divide_exact(IntPoly::constant(c), qn);
        d.try_divide_exact(IntPoly::constant(c), qd);
        n = std::move(qn);
        d = std::move(qd);
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

RatFun& RatFun::operator+=(const RatFun& rhs) {
    if (den_ == rhs.den_) return *this = RatFun(num_ + rhs.num_, den_);
    return *this = RatFun(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFun& RatFun::operator-=(const RatFun& rhs) {
    if (den_ == rhs.den_) return *this = RatFun(num_ - rhs.num_, den_);
    return *this = RatFun(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RatFun& RatFun::operator*=(const RatFun& rhs) {
    if (is_polynomial() && rhs.is_polynomial())
        return *this = RatFun(num_ * rhs.num_, IntPoly::constant(1), Reduced{});
    return *this = RatFun(num_ * rhs.num_, den_ * rhs.den_);
}

RatFun& RatFun::operator/=(const RatFun& rhs) {
    if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero rational function");
    return *this = RatFun(num_ * rhs.den_, den_ * rhs.num_);
}

RatFun pow(const RatFun& base, unsigned exponent) {
    RatFun out(1);
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

NotPolynomialError::NotPolynomialError(const RatFun& value, IntPoly remainder)
    : Error(ErrorKind::NotPolynomial, "not a polynomial: " + to_string(value)),
      value_(value),
      remainder_(std::move(remainder)) {}

IntPoly to_polynomial(const RatFun& f) {
    if (f.is_polynomial()) return f.num();
    throw NotPolynomialError(f, pseudo_remainder(f.num(), f.den()));
}

RatFun geo_sum(long lo, long hi) {
    if (lo < 0 || hi < lo)
        throw Error(ErrorKind::InvalidRange,
                    "geo_sum needs 0 <= lo <= hi, got lo=" + std::to_string(lo) + " hi=" + std::to_string(hi));
    IntPoly num = IntPoly::monomial(1, 2 * static_cast<std::size_t>(lo)) -
                  IntPoly::monomial(1, 2 * static_cast<std::size_t>(hi));
    return RatFun(num, IntPoly{1, 0, -1});
}

Rational eval_rational(const RatFun& f, const Rational& x) {
    Rational d = f.den().eval(x);
    if (sgn(d) == 0) throw Error(ErrorKind::PoleAtPoint, "denominator vanishes at t = " + to_string(x));
    Rational out = f.num().eval(x) / d;
    out.canonicalize();
    return out;
}

std::string to_string(const RatFun& f, std::string_view var) {
    if (f.is_polynomial()) return to_string(f.num(), var);
    return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

}  // namespace mcc
