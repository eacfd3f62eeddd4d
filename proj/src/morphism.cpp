#include "sturmkit/morphism.hpp"

#include <algorithm>

#include "sturmkit/words.hpp"

namespace sturmkit {

namespace morphisms {

BinaryMorphism identity() { return BinaryMorphism::from_images("0", "1"); }
BinaryMorphism exchange() { return BinaryMorphism::from_images("1", "0"); }

BinaryMorphism psi(int i) {
    switch (i) {
        case 1: return BinaryMorphism::from_images("01", "0");
        case 2: return BinaryMorphism::from_images("10", "0");
        case 3: return BinaryMorphism::from_images("0", "01");
        case 4: return BinaryMorphism::from_images("0", "10");
        case 5: return BinaryMorphism::from_images("1", "10");
        case 6: return BinaryMorphism::from_images("1", "01");
        case 7: return BinaryMorphism::from_images("10", "1");
        case 8: return BinaryMorphism::from_images("01", "1");
        default: throw DomainError("elementary morphism index must be 1..8");
    }
}

BinaryMorphism phi0() { return psi(3); }
BinaryMorphism phi1() { return psi(1); }

} // namespace morphisms

BinaryMorphism compose(const BinaryMorphism& sigma, const BinaryMorphism& tau) {
    return {sigma.apply(tau.image(0)), sigma.apply(tau.image(1))};
}

BinaryMorphism time_reversal(const BinaryMorphism& sigma) {
    return {sigma.image(0).reversed(), sigma.image(1).reversed()};
}

BinaryMorphism exchange_conjugate(const BinaryMorphism& sigma) {
    return {sigma.image(1).exchanged(), sigma.image(0).exchanged()};
}

Mat2 incidence_matrix(const BinaryMorphism& sigma) {
    Mat2 m{0, 0, 0, 0};
    for (std::size_t i = 0; i < sigma.image(0).size(); ++i)
        (sigma.image(0).at(i) == 0 ? m.a : m.c) += 1;
    for (std::size_t i = 0; i < sigma.image(1).size(); ++i)
        (sigma.image(1).at(i) == 0 ? m.b : m.d) += 1;
    return m;
}

bool is_prolongable_on(const BinaryMorphism& sigma, int letter) {
    const Word& img = sigma.image(letter);
    return img.size() >= 2 && img.first() == letter;
}

Word fixed_point(const BinaryMorphism& sigma, std::size_t n, std::optional<int> start_letter) {
    int letter;
    if (start_letter) {
        letter = *start_letter;
        if (letter != 0 && letter != 1) throw DomainError("start letter must be 0 or 1");
        if (!is_prolongable_on(sigma, letter))
            throw NotProlongableError("morphism is not prolongable on the selected letter");
    } else if (is_prolongable_on(sigma, 0)) {
        letter = 0;
    } else if (is_prolongable_on(sigma, 1)) {
        letter = 1;
    } else {
        throw NotProlongableError("morphism has no prolongable letter");
    }
    Word w = Word::letter(letter);
    while (w.size() < n) {
        std::size_t before = w.size();
        w = sigma.apply(w);
        if (w.size() <= before) throw NotProlongableError("iteration does not grow");
    }
    return w.prefix(n);
}

bool is_fixed_by(const BinaryMorphism& sigma, const QuadraticNumber& alpha,
                 const QuadraticNumber& rho, std::size_t n, bool use_ceiling) {
    if (n < 2) throw DomainError("prefix check needs n >= 2");
    Word s = use_ceiling ? sturmian_ceil(alpha, rho, n) : sturmian_floor(alpha, rho, n);
    return sigma.apply(s).prefix(n) == s;
}

BinaryMorphism to_morphism(const PsiWord& word) {
    BinaryMorphism m = morphisms::identity();
    for (int i : word) m = compose(m, morphisms::psi(i));
    return m;
}

bool ends_in_zero(const PsiWord& word) {
    int ones = 0;
    for (int i : word) {
        if (i == 1) ++ones;
        else if (i != 3) throw DomainError("word must be over {psi1, psi3}");
    }
    return ones % 2 == 0;
}

BinaryMorphism shift_conjugate(const BinaryMorphism& gamma) {
    const Word& g0 = gamma.image(0);
    if (g0.last() != 0)
        throw ConjugationUndefinedError("image of 0 does not end in 0");
    Word u = g0.drop_last(1);
    auto conj = [&](int letter) {
        Word w = gamma.image(letter) + u;
        if (!w.starts_with(u))
            throw InternalError("conjugating word is not a prefix of the shifted image");
        return w.drop_first(u.size());
    };
    return {conj(0), conj(1)};
}

PsiWord star_dual(const PsiWord& word) {
    PsiWord out;
    out.reserve(word.size());
    for (int i : word) {
        if (i == 3) out.push_back(8);
        else if (i == 8) out.push_back(3);
        else throw DomainError("word must be over {psi3, psi8}");
    }
    return out;
}

PsiWord conjugation_preimage(const PsiWord& word) {
    if (word.empty() || word.front() != 3)
        throw DomainError("word must start with psi3");
    for (int i : word)
        if (i != 3 && i != 8) throw DomainError("word must be over {psi3, psi8}");
    std::size_t m = word.size();
    PsiWord out(m);
    for (std::size_t j = 0; j < m; ++j) {
        int x = j + 1 < m ? word[j + 1] : 3; // (i2 .. im, 3)
        int y = j == 0 ? 3 : word[j];        // (3, i2 .. im)
        int sum = (x == y) ? 3 : 8;
        out[j] = sum == 8 ? 1 : 3;
    }
    return out;
}

namespace {

struct GeneratorInfo {
    int label0, label1;
    BinaryMorphism g0, g1;
};

GeneratorInfo generator_pair(GeneratorSet set) {
    switch (set) {
        case GeneratorSet::Phi01: return {3, 1, morphisms::psi(3), morphisms::psi(1)};
        case GeneratorSet::Psi38: return {3, 8, morphisms::psi(3), morphisms::psi(8)};
        case GeneratorSet::Psi24: return {2, 4, morphisms::psi(2), morphisms::psi(4)};
        case GeneratorSet::Psi47: return {4, 7, morphisms::psi(4), morphisms::psi(7)};
    }
    throw DomainError("unknown generator set");
}

// M * G^{-1} when it has nonnegative integer entries (G is unimodular).
std::optional<Mat2> peel_right(const Mat2& m, const Mat2& g) {
    BigInt det = g.det(); // +1 or -1 for all generators here
    Mat2 inv{g.d / det, -g.b / det, -g.c / det, g.a / det};
    Mat2 q = m * inv;
    if (!q.nonnegative()) return std::nullopt;
    return q;
}

} // namespace

PsiWord decompose(const BinaryMorphism& sigma, GeneratorSet set) {
    GeneratorInfo gen = generator_pair(set);
    Mat2 a = incidence_matrix(gen.g0);
    Mat2 b = incidence_matrix(gen.g1);
    Mat2 m = incidence_matrix(sigma);

    // Peel the first-applied factor: its matrix divides on the right.
    PsiWord first_applied;
    while (!(m == Mat2::identity())) {
        auto qa = peel_right(m, a);
        auto qb = peel_right(m, b);
        if (qa.has_value() == qb.has_value())
            throw NotInMonoidError("incidence matrix does not factor over the generator pair");
        first_applied.push_back(qa ? gen.label0 : gen.label1);
        m = qa ? *qa : *qb;
        if (first_applied.size() > 4096)
            throw NotInMonoidError("factorization does not terminate");
    }

    PsiWord word(first_applied.rbegin(), first_applied.rend());
    if (!(to_morphism(word) == sigma))
        throw NotInMonoidError("matrix factorization does not recompose to the morphism");
    return word;
}

} // namespace sturmkit
