#include <doctest.h>

#include "helpers.hpp"
#include "sturmkit/solver.hpp"
#include "sturmkit/words.hpp"

using namespace sturmkit;
using namespace sturmkit::testing;

namespace {

QuadraticNumber mod1(const QuadraticNumber& x) {
    return x - QuadraticNumber(Rational(floor_of(x)));
}

} // namespace

TEST_CASE("elementary maps act as printed") {
    FracLinMap t3 = elementary_map(3);
    CHECK(t3.a == 1);
    CHECK(t3.b == 0);
    CHECK(t3.c == 1);
    CHECK(t3.d == 1);
    QuadraticNumber x = fibonacci_alpha(), y(Rational(1, 3));
    CHECK(apply_x(t3, x) == x / (QuadraticNumber(1) + x));
    CHECK(apply_y(t3, x, y) == y / (QuadraticNumber(1) + x));

    FracLinMap t1 = elementary_map(1);
    CHECK((t1.a == -1 && t1.b == 1 && t1.c == -1 && t1.d == 2));
    CHECK((t1.p == -1 && t1.q == 0 && t1.r == 1));

    // T8 sends the Fibonacci slope at rho = 0 to ((sqrt5 - 1)/2, 0).
    FracLinMap t8 = elementary_map(8);
    CHECK((t8.a == 0 && t8.b == 1 && t8.c == -1 && t8.d == 2));
    CHECK(apply_x(t8, fibonacci_alpha()) == golden_minus_one());
    CHECK(apply_y(t8, fibonacci_alpha(), QuadraticNumber(0)) == QuadraticNumber(0));

    CHECK_THROWS_AS(elementary_map(0), DomainError);
    CHECK_THROWS_AS(elementary_map(9), DomainError);
}

TEST_CASE("every elementary map transports exact prefixes") {
    // The word relation pinning each map, including the ceiling cases:
    // psi_i(s_{a,r}) equals the floor word of T_i(a,r), or the ceiling
    // word when the map is marked as swapping.
    std::vector<QuadraticNumber> alphas = {
        fibonacci_alpha(), pell_alpha(),    quad(-1, 1, 1, 1, 2), quad(-3, 2, 1, 2, 13),
        quad(2, 1, -1, 1, 3), golden_minus_one(), quad(0, 1, 1, 2, 2),
    };
    const std::size_t n = 300;
    int checked = 0;
    for (int i = 1; i <= 8; ++i) {
        FracLinMap t = elementary_map(i);
        BinaryMorphism psi = morphisms::psi(i);
        for (const auto& a : alphas) {
            std::vector<QuadraticNumber> rhos = {a, QuadraticNumber(0),
                                                 QuadraticNumber(1) - a,
                                                 QuadraticNumber(Rational(1, 3)),
                                                 mod1(a * QuadraticNumber(2))};
            for (const auto& r : rhos) {
                if (r.sign() < 0 || compare(r, QuadraticNumber(1)) >= 0) continue;
                QuadraticNumber x2 = apply_x(t, a);
                QuadraticNumber y2 = mod1(apply_y(t, a, r));
                Word image = psi.apply(sturmian_floor(a, r, n)).prefix(n);
                Word target = t.ceiling_swap ? sturmian_ceil(x2, y2, n) : sturmian_floor(x2, y2, n);
                CHECK(image == target);
                ++checked;
            }
        }
    }
    CHECK(checked >= 8 * 20);
}

TEST_CASE("composition stays in the family") {
    FracLinMap t38 = compose_maps(elementary_map(3), elementary_map(8));
    CHECK((t38.a == 0 && t38.b == 1 && t38.c == -1 && t38.d == 3)); // x -> 1/(3-x)

    FracLinMap t13 = compose_maps(elementary_map(1), elementary_map(3));
    CHECK((t13.a == 0 && t13.b == 1 && t13.c == 1 && t13.d == 2)); // x -> 1/(2+x)

    CHECK(compose_maps(FracLinMap::identity_map(), elementary_map(5)) == elementary_map(5));
    CHECK(compose_maps(elementary_map(5), FracLinMap::identity_map()) == elementary_map(5));

    auto rng = seeded_rng(31);
    for (int i = 0; i < 200; ++i) {
        PsiWord w(rand_in(rng, 1, 8));
        for (int& x : w) x = 1 + rng() % 8;
        FracLinMap m = word_map(w);
        CHECK(m.a * m.d - m.b * m.c != 0);
        CHECK((m.p == 1 || m.p == -1));
        // Associativity of composition on a random split.
        std::size_t cut = 1 + rng() % w.size();
        PsiWord left(w.begin(), w.begin() + cut), right(w.begin() + cut, w.end());
        CHECK(compose_maps(word_map(left), word_map(right)) == m);
    }
}

TEST_CASE("fixed points of the worked words") {
    SturmianParams fib = fixed_point_solve({1});
    CHECK(fib.alpha == fibonacci_alpha());
    CHECK(fib.rho == fibonacci_alpha());
    CHECK(fib.representative == Representative::Floor);

    SturmianParams s38 = fixed_point_solve({3, 8});
    CHECK(s38.alpha == fibonacci_alpha());
    CHECK(s38.rho == QuadraticNumber(0));
    CHECK(s38.representative == Representative::Floor);
    CHECK(is_fixed_by(s38.morphism, s38.alpha, s38.rho, 300));

    SturmianParams s13 = fixed_point_solve({1, 3});
    CHECK(s13.alpha == quad(-1, 1, 1, 1, 2));
    CHECK(s13.rho == quad(-1, 1, 1, 1, 2));
    CHECK(s13.representative == Representative::Floor);

    // psi2 alone exchanges the lozenge pair at its fixed parameters; the
    // square fixes the floor word.
    SturmianParams s2 = fixed_point_solve({2});
    CHECK(s2.alpha == fibonacci_alpha());
    CHECK(s2.rho == golden_minus_one());
    CHECK(s2.representative == Representative::Ceiling);
    REQUIRE(s2.floor_fixer.has_value());
    CHECK(*s2.floor_fixer == BinaryMorphism::from_images("010", "10"));
    CHECK(is_fixed_by(*s2.floor_fixer, s2.alpha, s2.rho, 300));
    CHECK(is_fixed_by(*s2.floor_fixer, s2.alpha, s2.rho, 300, true));
}

TEST_CASE("degenerate words have no fixed point") {
    CHECK_THROWS_AS(fixed_point_solve({}), NoFixedPointError);
    CHECK_THROWS_AS(fixed_point_solve({3}), NoFixedPointError);
    CHECK_THROWS_AS(fixed_point_solve({3, 3, 3}), NoFixedPointError);
    CHECK_THROWS_AS(fixed_point_solve({8}), NoFixedPointError);
    CHECK_THROWS_AS(fixed_point_solve({4}), NoFixedPointError);
}

TEST_CASE("solver soundness on random generator words") {
    auto rng = seeded_rng(32);
    for (const std::vector<int>& labels : {std::vector<int>{1, 3}, std::vector<int>{3, 8}}) {
        int solved = 0;
        while (solved < 100) {
            PsiWord w(rand_in(rng, 1, 6));
            for (int& x : w) x = labels[rng() % 2];
            SturmianParams sol;
            try {
                sol = fixed_point_solve(w);
            } catch (const NoFixedPointError&) {
                continue;
            }
            ++solved;
            BigInt disc = [&] {
                FracLinMap m = word_map(w);
                return (m.d - m.a) * (m.d - m.a) + 4 * m.b * m.c;
            }();
            CHECK(disc > 0);
            CHECK_FALSE(is_perfect_square(disc));
            CHECK(is_sturm_number(sol.alpha));
            bool ceiling = sol.representative == Representative::Ceiling;
            CHECK(is_fixed_by(sol.morphism, sol.alpha, sol.rho, 300, ceiling));
        }
    }
}
