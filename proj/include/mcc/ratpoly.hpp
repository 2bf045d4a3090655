#pragma once

// Exact univariate polynomials over Z and their quotients, in the variable t.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "mcc/errors.hpp"

namespace mcc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of t^i; the highest stored coefficient is
/// never zero, and the zero polynomial stores nothing.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, std::size_t degree);
    static IntPoly variable() { return monomial(1, 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of t^i; zero past the degree.
    Integer coeff(std::size_t i) const;
    const Integer& leading() const;

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    Integer content() const;
    /// this / content, with positive leading coefficient.
    IntPoly primitive_part() const;
    IntPoly derivative() const;
    Rational eval(const Rational& x) const;
    bool is_palindromic() const;

    /// Quotient by `divisor` when it divides exactly over Z.
    /// Throws Error(InvalidArgument) otherwise.
    IntPoly divide_exact(const IntPoly& divisor) const;
    /// Sets `quotient` and returns true when the division is exact over Z.
    bool try_divide_exact(const IntPoly& divisor, IntPoly& quotient) const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const Integer& rhs);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Integer& k) { return a *= k; }
    friend IntPoly operator-(IntPoly a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<Integer> coeffs_;
};

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Ascending powers, e.g. `1 + 2*t^2 - t^4`; "0" for the zero polynomial.
std::string to_string(const IntPoly& p, std::string_view var = "t");

/// Reduced quotient num/den. The denominator is nonzero with positive leading
/// coefficient, and num, den share no nonconstant factor and no common integer
/// content, so structural equality is mathematical equality.
class RatFun {
public:
    RatFun() : den_(IntPoly::constant(1)) {}
    RatFun(const IntPoly& p);  // NOLINT: polynomials are rational functions
    RatFun(long c) : RatFun(IntPoly::constant(c)) {}  // NOLINT
    RatFun(const IntPoly& num, const IntPoly& den);

    static RatFun variable() { return RatFun(IntPoly::variable()); }

    const IntPoly& num() const noexcept { return num_; }
    const IntPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    /// True when the reduced denominator is exactly 1.
    bool is_polynomial() const noexcept { return den_.degree() == 0 && den_.leading() == 1; }

    RatFun& operator+=(const RatFun& rhs);
    RatFun& operator-=(const RatFun& rhs);
    RatFun& operator*=(const RatFun& rhs);
    RatFun& operator/=(const RatFun& rhs);

    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend RatFun operator-(const RatFun& a) { return RatFun(-a.num_, a.den_); }
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    struct Reduced {};
    RatFun(IntPoly num, IntPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    IntPoly num_;
    IntPoly den_;
};

/// Raised by to_polynomial when a reduced denominator is nonconstant.
class NotPolynomialError : public Error {
public:
    NotPolynomialError(const RatFun& value, IntPoly remainder);

    /// The offending reduced value.
    const RatFun& value() const noexcept { return value_; }
    /// Pseudo-remainder of num by den; nonzero.
    const IntPoly& remainder() const noexcept { return remainder_; }

private:
    RatFun value_;
    IntPoly remainder_;
};

IntPoly to_polynomial(const RatFun& f);

/// (t^{2 lo} - t^{2 hi}) / (1 - t^2) = t^{2 lo} + ... + t^{2 (hi - 1)}.
RatFun geo_sum(long lo, long hi);

/// Exact value at x; throws Error(PoleAtPoint) when the denominator vanishes.
Rational eval_rational(const RatFun& f, const Rational& x);

/// `num` when the denominator is 1, otherwise `(num)/(den)`.
std::string to_string(const RatFun& f, std::string_view var = "t");

/// "p/q", or "p" for integers.
std::string to_string(const Rational& q);

RatFun pow(const RatFun& base, unsigned exponent);

}  // namespace mcc
