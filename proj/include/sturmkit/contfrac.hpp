#pragma once

#include <optional>
#include <vector>

#include "sturmkit/quadratic.hpp"

namespace sturmkit {

/// Simple continued fraction of a number in (0, 1).  The preperiod starts
/// with the integer part (always 0 here); the period is empty exactly for
/// rationals and is the least period otherwise.
struct ContinuedFraction {
    std::vector<BigInt> preperiod;
    std::vector<BigInt> period;

    bool is_periodic() const { return !period.empty(); }
    /// Digit of the eventually periodic expansion at position i.
    const BigInt& digit(std::size_t i) const;

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// Expands x in (0, 1) by the exact surd algorithm on integer states
/// (P + sqrt(D))/Q, detecting the period by state repetition.  Rationals
/// get a finite Euclidean expansion.
ContinuedFraction continued_fraction(const QuadraticNumber& x, int max_steps = 4096);

/// True iff x is a quadratic irrational in (0,1) whose algebraic
/// conjugate lies outside [0,1] (the slopes of substitution invariant
/// characteristic words).  Rationals and out-of-range inputs give false.
bool is_sturm_number(const QuadraticNumber& x);

/// Yasutomi's criterion: s_{alpha,rho} is substitution invariant iff
/// alpha is a quadratic irrational with rho in Q(alpha), and the
/// conjugates satisfy either
///   conj(alpha) > 1  and  1 - conj(alpha) <= conj(rho) <= conj(alpha), or
///   conj(alpha) < 0  and  conj(alpha) <= conj(rho) <= 1 - conj(alpha).
/// Preconditions 0 < alpha < 1 and 0 <= rho <= 1 are enforced.
bool is_substitution_invariant(const QuadraticNumber& alpha, const QuadraticNumber& rho);

enum class SlopeCase {
    Small, // alpha < 1/2: expansion [0; 1+a0, cycle], last cycle digit >= a0 >= 1
    Large, // alpha > 1/2: expansion [0; 1, a0, cycle], last cycle digit >= a0
};

struct SturmForm {
    SlopeCase slope;
    BigInt a0;
    std::vector<BigInt> period_digits; // a_1 ... a_k
    ContinuedFraction raw;             // the minimal expansion, reported alongside

    std::size_t k() const { return period_digits.size(); }
};

/// Matches the expansion of a quadratic irrational in (0,1) against the
/// invariant-slope shapes above.  The cycle is taken at the fixed start
/// position of each shape; lengths of 1x, 2x and 3x the least period are
/// tried before failing.  Returns nothing when no shape matches (which,
/// for exact inputs, happens exactly when is_sturm_number is false).
std::optional<SturmForm> try_cf_sturm_form(const QuadraticNumber& x, int max_steps = 4096);

/// As try_cf_sturm_form but for numbers already known to be Sturm;
/// throws ClassificationError instead of returning nothing.
SturmForm cf_sturm_form(const QuadraticNumber& x, int max_steps = 4096);

} // namespace sturmkit
