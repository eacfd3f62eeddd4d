#pragma once

#include "sturmkit/solver.hpp"

namespace sturmkit {

enum class RhoKind { Alpha, Zero, OneMinusAlpha };

struct FixerResult {
    PsiWord word;              // generator word of the discovered element
    BinaryMorphism morphism;   // the verified fixer (the square for rho = 1 - alpha)
    bool squared = false;      // morphism is the square of the word's composite
    QuadraticNumber alpha;
    QuadraticNumber rho;
};

/// Breadth-first search for a morphism fixing the Sturmian word with the
/// given slope and the selected intercept:
///   Alpha          - the characteristic word c_alpha; words over
///                    {phi0, phi1} (slopes above 1/2 via exchange duality).
///   Zero           - s_{alpha,0}, words over {psi3, psi8}; with the
///                    ceiling flag, s'_{alpha,0} over {psi4, psi7}.
///   OneMinusAlpha  - the lozenge pair at rho = 1 - alpha: squares of
///                    time-reversed fixers of c_alpha.
/// Candidates are solved exactly, matched against alpha, and verified on
/// 300 symbols before being returned.  Ties at equal depth go to the
/// lexicographically first generator word.
FixerResult find_fixing_morphism(const QuadraticNumber& alpha, RhoKind rho_kind,
                                 bool ceiling = false, int max_depth = 10);

} // namespace sturmkit
