#pragma once

#include <optional>
#include <utility>

#include "sturmkit/morphism.hpp"
#include "sturmkit/quadratic.hpp"

namespace sturmkit {

/// Two-dimensional fractional-linear map
///   x' = (a x + b) / (c x + d),   y' = (p y + q x + r) / (c x + d),
/// with integer coefficients and a d - b c != 0.  The family is closed
/// under composition.  ceiling_swap marks maps that carry the floor word
/// onto the ceiling representative of the image parameters.
struct FracLinMap {
    BigInt a = 1, b = 0, c = 0, d = 1;
    BigInt p = 1, q = 0, r = 0;
    bool ceiling_swap = false;

    static FracLinMap identity_map() { return {}; }

    /// Divides out the common factor of all seven coefficients and fixes
    /// the overall sign so equal maps have equal coefficients.
    void normalize();

    friend bool operator==(const FracLinMap&, const FracLinMap&) = default;
};

/// The map T_i with psi_i(s_{alpha,rho}) = s_{T_i(alpha,rho)} (or the
/// ceiling image when ceiling_swap is set), for i in 1..8.
FracLinMap elementary_map(int i);

/// (s . t)(x, y) = s(t(x, y)), in closed form with exact coefficients.
FracLinMap compose_maps(const FracLinMap& s, const FracLinMap& t);

/// The composite T for a generator word, multiplied in word order.
FracLinMap word_map(const PsiWord& word);

QuadraticNumber apply_x(const FracLinMap& m, const QuadraticNumber& x);
QuadraticNumber apply_y(const FracLinMap& m, const QuadraticNumber& x, const QuadraticNumber& y);

/// Solves T(x, y) = (x, y) exactly: the x equation
/// c x^2 + (d - a) x - b = 0 must have an irrational root in (0, 1),
/// and y then satisfies the linear equation y (c x + d - p) = q x + r.
/// rho is reduced mod 1 into [0, 1).
std::pair<QuadraticNumber, QuadraticNumber> solve_parameters(const FracLinMap& m);

enum class Representative { Floor, Ceiling };

struct SturmianParams {
    QuadraticNumber alpha;
    QuadraticNumber rho;
    /// Floor when the composite fixes s_{alpha,rho}; Ceiling when it
    /// fixes only the ceiling word or exchanges the two.
    Representative representative = Representative::Floor;
    PsiWord word;
    BinaryMorphism morphism = morphisms::identity();
    /// When the composite maps the floor word onto the ceiling word, its
    /// square fixes the floor word and is reported here.
    std::optional<BinaryMorphism> floor_fixer;
};

/// Full solve for a generator word: exact (alpha, rho) plus an empirical
/// determination (at 300 symbols) of which representative is fixed.
SturmianParams fixed_point_solve(const PsiWord& word);

} // namespace sturmkit
