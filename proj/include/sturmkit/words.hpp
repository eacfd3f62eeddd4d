#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sturmkit/quadratic.hpp"
#include "sturmkit/word.hpp"

namespace sturmkit {

/// Length-n prefix of the rotation word with symbols
///   w_k = floor((k+1) alpha + rho) - floor(k alpha + rho).
/// Requires 0 < alpha < 1; rho is reduced mod 1 for generation (the
/// symbols are invariant under integer shifts of rho).  alpha and rho
/// must lie in a common quadratic field.
Word sturmian_floor(const QuadraticNumber& alpha, const QuadraticNumber& rho, std::size_t n);

/// Ceiling variant of sturmian_floor.
Word sturmian_ceil(const QuadraticNumber& alpha, const QuadraticNumber& rho, std::size_t n);

/// The characteristic word: rho = alpha, identical under floor and
/// ceiling.  Requires alpha irrational.
Word characteristic_word(const QuadraticNumber& alpha, std::size_t n);

/// The index m at which the floor and ceiling words of (alpha, rho) form
/// a lozenge pair, i.e. the unique candidate m >= 0 with
/// m*alpha + rho a non-negative integer; nothing when no such m exists.
/// Writing rho = p + q*alpha decides this exactly, with no search.
/// Requires alpha a quadratic irrational in (0,1), rho in Q(alpha),
/// 0 <= rho <= 1.
std::optional<BigInt> lozenge_index(const QuadraticNumber& alpha, const QuadraticNumber& rho);

struct LozengeReport {
    std::optional<BigInt> index;
    std::vector<std::size_t> differing_positions; // within the compared prefix
};

/// Positionwise comparison of the floor and ceiling prefixes of length n,
/// together with the lozenge index.
LozengeReport lozenge_report(const QuadraticNumber& alpha, const QuadraticNumber& rho,
                             std::size_t n);

/// The pair (10 c_alpha, 01 c_alpha) truncated to length n; these are the
/// floor and ceiling words at rho = 1 - alpha.
std::pair<Word, Word> prepended_pair(const QuadraticNumber& alpha, std::size_t n);

} // namespace sturmkit
