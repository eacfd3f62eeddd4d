#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace sturmkit {

// Expression templates off: plain value semantics for arithmetic results.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

/// Floor of sqrt(n) for n >= 0.
inline BigInt isqrt(const BigInt& n) {
    return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = isqrt(n);
    return r * r == n;
}

/// Floor division, exact for both signs of a; b must be positive.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

/// Splits n = f*f*s with s squarefree; returns {s, f}.  n must be >= 0.
inline std::pair<BigInt, BigInt> squarefree_split(BigInt n) {
    BigInt s = 1, f = 1;
    if (n == 0) return {0, 1};
    for (BigInt p = 2; p * p <= n; ++p) {
        while (n % (p * p) == 0) {
            n /= p * p;
            f *= p;
        }
        if (n % p == 0) {
            n /= p;
            s *= p;
        }
    }
    s *= n;
    return {s, f};
}

} // namespace sturmkit
