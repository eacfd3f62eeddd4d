#pragma once

#include <random>
#include <utility>
#include <vector>

#include "sturmkit/contfrac.hpp"
#include "sturmkit/quadratic.hpp"

namespace sturmkit::testing {

// Deterministic generator; raw engine output is reduced by modulo so the
// streams do not depend on distribution implementations.
inline std::mt19937 seeded_rng(unsigned seed = 20260811u) { return std::mt19937(seed); }

inline long rand_in(std::mt19937& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

/// (p + sqrt(D)) / q with small random coefficients; nothing when the
/// draw is rational or falls outside (0, 1).
inline std::optional<QuadraticNumber> random_surd(std::mt19937& rng, long max_coef, long max_d) {
    long p = rand_in(rng, -max_coef, max_coef);
    long q = rand_in(rng, 1, max_coef);
    long d = rand_in(rng, 2, max_d);
    if (rand_in(rng, 0, 1)) q = -q;
    QuadraticNumber x(Rational(p, q), Rational(1, q), d);
    if (x.is_rational()) return std::nullopt;
    if (x.sign() <= 0 || compare(x, QuadraticNumber(1)) >= 0) return std::nullopt;
    return x;
}

inline QuadraticNumber quad(long an, long ad, long bn, long bd, long d) {
    return QuadraticNumber(Rational(an, ad), Rational(bn, bd), d);
}

inline QuadraticNumber fibonacci_alpha() { return quad(3, 2, -1, 2, 5); }   // (3 - sqrt 5)/2
inline QuadraticNumber pell_alpha() { return quad(1, 1, -1, 2, 2); }        // (2 - sqrt 2)/2
inline QuadraticNumber golden_minus_one() { return quad(-1, 2, 1, 2, 5); }  // (sqrt 5 - 1)/2

/// Independent re-evaluation oracle: folds a finite digit list
/// [a0; a1, ..., an] into an exact rational via the convergent
/// recurrence h_k = a_k h_{k-1} + h_{k-2} (same value as the backward
/// fold, without intermediate normalizations).
inline Rational fold_digits(const std::vector<BigInt>& digits) {
    BigInt h_prev = 1, h = digits[0];
    BigInt k_prev = 0, k = 1;
    for (std::size_t i = 1; i < digits.size(); ++i) {
        BigInt h_next = digits[i] * h + h_prev;
        BigInt k_next = digits[i] * k + k_prev;
        h_prev = std::exchange(h, h_next);
        k_prev = std::exchange(k, k_next);
    }
    return Rational(h, k);
}

} // namespace sturmkit::testing
