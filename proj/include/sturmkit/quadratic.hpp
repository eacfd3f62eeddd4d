#pragma once

#include "sturmkit/rational.hpp"

namespace sturmkit {

/// Exact element a + b*sqrt(d) of a real quadratic field, or a rational
/// when b = 0.  Canonical form: d squarefree, and d = 0 whenever b = 0,
/// so equality of values is equality of fields.
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(int n) : a_(n) {}                  // NOLINT(google-explicit-constructor)
    QuadraticNumber(const Rational& a) : a_(a) {}      // NOLINT(google-explicit-constructor)
    QuadraticNumber(Rational a, Rational b, BigInt d);

    static QuadraticNumber sqrt_of(const BigInt& d) { return QuadraticNumber(0, 1, d); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coefficient() const { return b_; }
    const BigInt& radicand() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return b_.is_zero() && a_.is_zero(); }

    /// Exact sign of the value, with no floating point involved.
    int sign() const;

    QuadraticNumber conjugate() const { return QuadraticNumber(a_, -b_, d_, PrivateTag{}); }

    QuadraticNumber operator-() const { return QuadraticNumber(-a_, -b_, d_, PrivateTag{}); }
    QuadraticNumber& operator+=(const QuadraticNumber& o);
    QuadraticNumber& operator-=(const QuadraticNumber& o);
    QuadraticNumber& operator*=(const QuadraticNumber& o);
    QuadraticNumber& operator/=(const QuadraticNumber& o);

    friend QuadraticNumber operator+(QuadraticNumber a, const QuadraticNumber& b) { return a += b; }
    friend QuadraticNumber operator-(QuadraticNumber a, const QuadraticNumber& b) { return a -= b; }
    friend QuadraticNumber operator*(QuadraticNumber a, const QuadraticNumber& b) { return a *= b; }
    friend QuadraticNumber operator/(QuadraticNumber a, const QuadraticNumber& b) { return a /= b; }

    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x == y); }

    double to_double() const;

private:
    struct PrivateTag {};
    // Trusted already-canonical construction.
    QuadraticNumber(Rational a, Rational b, BigInt d, PrivateTag)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    // Checks field compatibility and returns the common radicand.
    BigInt common_radicand(const QuadraticNumber& o) const;

    Rational a_;
    Rational b_;
    BigInt d_ = 0;
};

/// Exact sign of x - y; throws FieldMismatchError on incompatible radicands.
int compare(const QuadraticNumber& x, const QuadraticNumber& y);

/// The unique integer n with n <= x < n+1, decided exactly.
BigInt floor_of(const QuadraticNumber& x);
BigInt ceil_of(const QuadraticNumber& x);

QuadraticNumber conjugate(const QuadraticNumber& x);

} // namespace sturmkit
