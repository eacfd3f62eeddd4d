#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sturmkit/bigint.hpp"
#include "sturmkit/quadratic.hpp"
#include "sturmkit/word.hpp"

namespace sturmkit {

/// 2x2 integer matrix [[a, b], [c, d]].
struct Mat2 {
    BigInt a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    BigInt det() const { return a * d - b * c; }
    bool nonnegative() const { return a >= 0 && b >= 0 && c >= 0 && d >= 0; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Morphism of the free monoid over {0,1}, determined by the images of
/// the two letters.  Both images are nonempty.
class BinaryMorphism {
public:
    BinaryMorphism(Word image0, Word image1) : img_{std::move(image0), std::move(image1)} {
        if (img_[0].empty() || img_[1].empty())
            throw DomainError("morphism images must be nonempty");
    }

    static BinaryMorphism from_images(std::string_view w0, std::string_view w1) {
        return {Word::from_text(w0), Word::from_text(w1)};
    }

    const Word& image(int letter) const { return img_[letter]; }

    Word apply(const Word& w) const {
        Word out;
        for (std::size_t i = 0; i < w.size(); ++i) out.append(img_[w.at(i)]);
        return out;
    }

    bool is_identity() const {
        return img_[0].str() == "0" && img_[1].str() == "1";
    }

    friend bool operator==(const BinaryMorphism&, const BinaryMorphism&) = default;

private:
    std::array<Word, 2> img_;
};

// The named morphisms used throughout: the exchange E, the standard
// generator G = phi0, the Fibonacci morphism phi1, and the eight
// elementary morphisms psi_1..psi_8.
namespace morphisms {
BinaryMorphism identity();
BinaryMorphism exchange(); // E: 0 -> 1, 1 -> 0
BinaryMorphism psi(int i); // i in 1..8
BinaryMorphism phi0();     // = psi(3): 0 -> 0,  1 -> 01
BinaryMorphism phi1();     // = psi(1): 0 -> 01, 1 -> 0
} // namespace morphisms

/// (sigma . tau)(a) = sigma(tau(a)).
BinaryMorphism compose(const BinaryMorphism& sigma, const BinaryMorphism& tau);

/// Images reversed; a homomorphism for composition.
BinaryMorphism time_reversal(const BinaryMorphism& sigma);

/// E sigma E: letters swapped inside and out; an involution.
BinaryMorphism exchange_conjugate(const BinaryMorphism& sigma);

/// Entry (a, b) counts occurrences of letter a in the image of letter b,
/// so that incidence_matrix(compose(s, t)) = incidence_matrix(s) * incidence_matrix(t).
Mat2 incidence_matrix(const BinaryMorphism& sigma);

bool is_prolongable_on(const BinaryMorphism& sigma, int letter);

/// Length-n prefix of the infinite fixed point obtained by iterating
/// sigma on a prolongable letter (letter 0 preferred when both work, or
/// as selected).  Throws NotProlongableError when no letter qualifies.
Word fixed_point(const BinaryMorphism& sigma, std::size_t n,
                 std::optional<int> start_letter = std::nullopt);

/// Prefix test of sigma(s) = s for the Sturmian word with the given
/// parameters (ceiling representative when use_ceiling is set).
bool is_fixed_by(const BinaryMorphism& sigma, const QuadraticNumber& alpha,
                 const QuadraticNumber& rho, std::size_t n, bool use_ceiling = false);

/// Generator words denote compositions read left to right:
/// [i1, i2, ..., in] is psi_{i1} . psi_{i2} . ... . psi_{in}.
using PsiWord = std::vector<int>;

BinaryMorphism to_morphism(const PsiWord& word);

/// For words over {psi1, psi3}: the image of 0 ends in 0 iff the number
/// of psi1 factors is even.
bool ends_in_zero(const PsiWord& word);

/// Conjugate of gamma by u = gamma(0) with its final 0 removed: the
/// unique morphism with u * result(a) = gamma(a) * u.  Transports fixed
/// points c to fixed points 0c.  Requires gamma(0) to end in 0.
BinaryMorphism shift_conjugate(const BinaryMorphism& gamma);

/// Swaps psi3 <-> psi8 labels.  As morphisms this is conjugation by E
/// combined with time reversal.
PsiWord star_dual(const PsiWord& word);

/// Inverse coding for shift conjugation on {psi3, psi8} words starting
/// with psi3: returns the {psi1, psi3} word gamma with
/// shift_conjugate(gamma) equal to the input composite.  Positionwise sum
/// of (i2..im, 3) and (3, i2..im) under 3+3=8+8=3, 3+8=8+3=8, then 8 -> 1.
PsiWord conjugation_preimage(const PsiWord& word);

enum class GeneratorSet {
    Phi01, // {phi0, phi1} = {psi3, psi1}
    Psi38,
    Psi24,
    Psi47,
};

/// Unique factorization of sigma over the generator pair, found by
/// peeling incidence-matrix factors from the first-applied side and
/// verified by recomposition.  Throws NotInMonoidError when sigma is not
/// in the monoid.  The result is in composition order (see PsiWord).
PsiWord decompose(const BinaryMorphism& sigma, GeneratorSet set);

} // namespace sturmkit
