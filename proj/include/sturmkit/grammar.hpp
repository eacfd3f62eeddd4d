#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sturmkit/quadratic.hpp"
#include "sturmkit/word.hpp"

namespace sturmkit {

class BinaryMorphism;

/// Parses the quadratic-number grammar used by the CLI and file formats:
///   (<int> + <int>*sqrt(<uint>)) / <int>     e.g.  (3-1*sqrt(5))/2
///   <int>/<int>                              e.g.  2/5
///   <int>                                    e.g.  -1
/// Whitespace is insignificant; values are canonicalized on construction.
QuadraticNumber parse_quadratic(std::string_view text);

/// Formats in the same grammar, canonically: rationals as "n" or "p/q",
/// irrationals always as "(A+B*sqrt(d))/C" with C > 0.
std::string format_quadratic(const QuadraticNumber& x);

std::string format_rational(const Rational& r);
Rational parse_rational(std::string_view text);

/// Morphism text format: 0->WORD,1->WORD with nonempty 0/1 words.
BinaryMorphism parse_morphism(std::string_view text);
std::string format_morphism(const BinaryMorphism& m);

/// Generator words are comma-separated labels: psi1..psi8, or the
/// aliases phi0 (= psi3) and phi1 (= psi1).
std::vector<int> parse_generator_word(std::string_view text);
std::string format_generator_word(const std::vector<int>& psi, bool phi_names = false);

} // namespace sturmkit
