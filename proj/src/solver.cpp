#include "sturmkit/solver.hpp"

#include "sturmkit/words.hpp"

namespace sturmkit {

void FracLinMap::normalize() {
    BigInt g = 0;
    for (const BigInt* v : {&a, &b, &c, &d, &p, &q, &r}) g = big_gcd(g, *v);
    if (g > 1)
        for (BigInt* v : {&a, &b, &c, &d, &p, &q, &r}) *v /= g;
    if (d < 0 || (d == 0 && c < 0))
        for (BigInt* v : {&a, &b, &c, &d, &p, &q, &r}) *v = -*v;
}

FracLinMap elementary_map(int i) {
    // The x part transports the frequency of the letter 1 and follows
    // from the incidence matrix alone; it reproduces the printed maps
    // for i = 1, 3, 8.
    Mat2 m = incidence_matrix(morphisms::psi(i));
    FracLinMap t;
    t.a = m.d - m.c;
    t.b = m.c;
    t.c = m.b + m.d - m.a - m.c;
    t.d = m.a + m.c;
    // The y parts are determined only modulo integer shifts by the
    // denominator (adding k*(c, d) to (q, r) moves y' by k).  The values
    // below keep the unit box inside [0, 1]; those for i = 2, 4, 5, 6, 7
    // were fitted by enumerating small integer coefficients against
    // exact 300-symbol prefixes over floor and ceiling targets, and the
    // whole table is revalidated by the map property tests.  The
    // ceiling_swap flags record which maps carry the floor word onto the
    // ceiling representative wherever the two differ.
    switch (i) {
        case 1: t.p = -1, t.q = 0, t.r = 1, t.ceiling_swap = true; break;
        case 2: t.p = -1, t.q = -1, t.r = 2, t.ceiling_swap = true; break;
        case 3: t.p = 1, t.q = 0, t.r = 0, t.ceiling_swap = false; break;
        case 4: t.p = 1, t.q = 1, t.r = 0, t.ceiling_swap = false; break;
        case 5: t.p = -1, t.q = 1, t.r = 1, t.ceiling_swap = true; break;
        case 6: t.p = -1, t.q = 0, t.r = 1, t.ceiling_swap = true; break;
        case 7: t.p = 1, t.q = -1, t.r = 1, t.ceiling_swap = false; break;
        case 8: t.p = 1, t.q = 0, t.r = 0, t.ceiling_swap = false; break;
        default: throw DomainError("elementary map index must be 1..8");
    }
    return t;
}

FracLinMap compose_maps(const FracLinMap& s, const FracLinMap& t) {
    FracLinMap out;
    out.a = s.a * t.a + s.b * t.c;
    out.b = s.a * t.b + s.b * t.d;
    out.c = s.c * t.a + s.d * t.c;
    out.d = s.c * t.b + s.d * t.d;
    out.p = s.p * t.p;
    out.q = s.p * t.q + s.q * t.a + s.r * t.c;
    out.r = s.p * t.r + s.q * t.b + s.r * t.d;
    out.ceiling_swap = s.ceiling_swap != t.ceiling_swap;
    out.normalize();
    return out;
}

FracLinMap word_map(const PsiWord& word) {
    FracLinMap m = FracLinMap::identity_map();
    for (int i : word) m = compose_maps(m, elementary_map(i));
    return m;
}

QuadraticNumber apply_x(const FracLinMap& m, const QuadraticNumber& x) {
    QuadraticNumber den = QuadraticNumber(Rational(m.c)) * x + QuadraticNumber(Rational(m.d));
    return (QuadraticNumber(Rational(m.a)) * x + QuadraticNumber(Rational(m.b))) / den;
}

QuadraticNumber apply_y(const FracLinMap& m, const QuadraticNumber& x, const QuadraticNumber& y) {
    QuadraticNumber den = QuadraticNumber(Rational(m.c)) * x + QuadraticNumber(Rational(m.d));
    QuadraticNumber num = QuadraticNumber(Rational(m.p)) * y +
                          QuadraticNumber(Rational(m.q)) * x + QuadraticNumber(Rational(m.r));
    return num / den;
}

std::pair<QuadraticNumber, QuadraticNumber> solve_parameters(const FracLinMap& m) {
    if (m.c == 0)
        throw NoFixedPointError("fixed-point equation for x is not quadratic");
    BigInt disc = (m.d - m.a) * (m.d - m.a) + 4 * m.b * m.c;
    if (disc <= 0 || is_perfect_square(disc))
        throw NoFixedPointError("no irrational root");

    QuadraticNumber zero(0), one(1);
    std::optional<QuadraticNumber> alpha;
    for (int sign : {1, -1}) {
        QuadraticNumber root(Rational(m.a - m.d, 2 * m.c), Rational(sign, 2 * m.c), disc);
        if (compare(root, zero) > 0 && compare(root, one) < 0) {
            if (alpha) throw InternalError("both roots lie in (0,1)");
            alpha = root;
        }
    }
    if (!alpha) throw NoFixedPointError("no root in (0,1)");

    QuadraticNumber coeff =
        QuadraticNumber(Rational(m.c)) * *alpha + QuadraticNumber(Rational(m.d - m.p));
    QuadraticNumber rhs =
        QuadraticNumber(Rational(m.q)) * *alpha + QuadraticNumber(Rational(m.r));
    if (coeff.is_zero()) {
        if (rhs.is_zero())
            throw AmbiguousRhoError("every rho is fixed; the y equation is degenerate");
        throw NoFixedPointError("the y equation has no solution");
    }
    QuadraticNumber rho = rhs / coeff;
    rho -= QuadraticNumber(Rational(floor_of(rho)));
    return {*alpha, rho};
}

SturmianParams fixed_point_solve(const PsiWord& word) {
    FracLinMap map = word_map(word);
    auto [alpha, rho] = solve_parameters(map);

    SturmianParams out;
    out.alpha = alpha;
    out.rho = rho;
    out.word = word;
    out.morphism = to_morphism(word);

    constexpr std::size_t kPrefix = 300;
    Word lo = sturmian_floor(alpha, rho, kPrefix);
    Word image = out.morphism.apply(lo).prefix(kPrefix);
    if (image == lo) {
        out.representative = Representative::Floor;
        return out;
    }
    Word hi = sturmian_ceil(alpha, rho, kPrefix);
    if (image == hi) {
        // The composite exchanges the lozenge pair; its square fixes the
        // floor word.
        out.representative = Representative::Ceiling;
        BinaryMorphism square = compose(out.morphism, out.morphism);
        if (!(square.apply(lo).prefix(kPrefix) == lo))
            throw InternalError("squared composite does not fix the floor word");
        out.floor_fixer = square;
        return out;
    }
    if (out.morphism.apply(hi).prefix(kPrefix) == hi) {
        out.representative = Representative::Ceiling;
        return out;
    }
    throw InternalError("solved parameters are not fixed by the composite");
}

} // namespace sturmkit
