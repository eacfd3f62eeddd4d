#pragma once

#include "sturmkit/bigint.hpp"
#include "sturmkit/errors.hpp"

namespace sturmkit {

using RationalRep = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Exact rational number in canonical form: denominator > 0,
/// gcd(|numerator|, denominator) = 1.  Backed by a rational adaptor,
/// which maintains exactly that normal form.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}                 // NOLINT(google-explicit-constructor)
    Rational(const BigInt& n) : value_(n) {}       // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DivisionByZeroError("rational with zero denominator");
        value_ = den < 0 ? RationalRep(-num, -den) : RationalRep(num, den);
    }

    BigInt numerator() const { return BigInt(boost::multiprecision::numerator(value_)); }
    BigInt denominator() const { return BigInt(boost::multiprecision::denominator(value_)); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return boost::multiprecision::denominator(value_) == 1; }

    int sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }

    BigInt floor() const { return floor_div(numerator(), denominator()); }
    BigInt ceil() const { return -floor_div(-numerator(), denominator()); }

    Rational operator-() const { return Rational(-value_); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    double to_double() const { return value_.convert_to<double>(); }

private:
    explicit Rational(RationalRep v) : value_(std::move(v)) {}

    RationalRep value_;
};

} // namespace sturmkit
