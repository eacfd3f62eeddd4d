#include "sturmkit/quadratic.hpp"

#include <cmath>

namespace sturmkit {

QuadraticNumber::QuadraticNumber(Rational a, Rational b, BigInt d) : a_(std::move(a)) {
    if (d < 0) throw DomainError("negative radicand");
    if (b.is_zero() || d == 0) {
        return; // rational; b_ = 0, d_ = 0
    }
    auto [sf, factor] = squarefree_split(d);
    b = b * Rational(factor);
    if (sf <= 1) {
        // sqrt(0) = 0, sqrt(1) = 1: fold into the rational part.
        a_ += b * Rational(sf);
        return;
    }
    b_ = std::move(b);
    d_ = std::move(sf);
}

BigInt QuadraticNumber::common_radicand(const QuadraticNumber& o) const {
    if (b_.is_zero()) return o.d_;
    if (o.b_.is_zero()) return d_;
    if (d_ != o.d_) throw FieldMismatchError("mixed radicands sqrt(" + d_.str() + ") and sqrt(" + o.d_.str() + ")");
    return d_;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
    BigInt d = common_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    d_ = b_.is_zero() ? BigInt(0) : d;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) {
    BigInt d = common_radicand(o);
    a_ -= o.a_;
    b_ -= o.b_;
    d_ = b_.is_zero() ? BigInt(0) : d;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
    BigInt d = common_radicand(o);
    Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = b_.is_zero() ? BigInt(0) : d;
    return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) {
    if (o.is_zero()) throw DivisionByZeroError("division by zero");
    BigInt d = common_radicand(o);
    // 1/(a + b sqrt(d)) = (a - b sqrt(d)) / (a^2 - b^2 d); the norm is
    // nonzero because sqrt(d) is irrational whenever b != 0.
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(d);
    Rational a = (a_ * o.a_ - b_ * o.b_ * Rational(d)) / norm;
    Rational b = (b_ * o.a_ - a_ * o.b_) / norm;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = b_.is_zero() ? BigInt(0) : d;
    return *this;
}

int QuadraticNumber::sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    int sa = a_.sign(), sb = b_.sign();
    if (sa == sb) return sa;
    // Opposite signs: compare |a| with |b| sqrt(d) by squaring.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs) return 0; // unreachable for squarefree d >= 2
    return lhs > rhs ? sa : sb;
}

double QuadraticNumber::to_double() const {
    double v = a_.to_double();
    if (!b_.is_zero()) v += b_.to_double() * std::sqrt(d_.convert_to<double>());
    return v;
}

int compare(const QuadraticNumber& x, const QuadraticNumber& y) {
    return (x - y).sign();
}

BigInt floor_of(const QuadraticNumber& x) {
    if (x.is_rational()) return x.rational_part().floor();
    // Put x over one positive integer denominator: x = (A + B sqrt(d)) / C.
    const Rational& a = x.rational_part();
    const Rational& b = x.radical_coefficient();
    BigInt ad = a.denominator(), bd = b.denominator();
    BigInt g = big_gcd(ad, bd);
    BigInt c = ad / g * bd;
    BigInt numA = a.numerator() * (c / ad);
    BigInt numB = b.numerator() * (c / bd);
    // floor(|B| sqrt(d)) = isqrt(B^2 d) bounds the radical within 1.
    BigInt t = isqrt(numB * numB * x.radicand());
    BigInt approx = numA + (numB > 0 ? t : -t);
    BigInt n = floor_div(approx, c);
    // The estimate is off by at most one; fix up with exact comparisons.
    while (compare(x, QuadraticNumber(Rational(n))) < 0) --n;
    while (compare(x, QuadraticNumber(Rational(n + 1))) >= 0) ++n;
    return n;
}

BigInt ceil_of(const QuadraticNumber& x) {
    return -floor_of(-x);
}

QuadraticNumber conjugate(const QuadraticNumber& x) {
    return x.conjugate();
}

} // namespace sturmkit
