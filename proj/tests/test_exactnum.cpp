#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "sturmkit/contfrac.hpp"
#include "sturmkit/quadratic.hpp"

using namespace sturmkit;
using namespace sturmkit::testing;

namespace {

// Evaluates x^2 + p*x + q exactly; the minimal-polynomial oracle used to
// pin conjugate pairs independently of the conjugate() implementation.
QuadraticNumber monic_quadratic(const QuadraticNumber& x, long p, long q) {
    return x * x + QuadraticNumber(p) * x + QuadraticNumber(q);
}

} // namespace

TEST_CASE("rational canonical form and comparisons") {
    Rational r(BigInt(6), BigInt(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZeroError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZeroError);
}

TEST_CASE("field operations on quadratic numbers") {
    QuadraticNumber half(Rational(1, 2));
    CHECK(half + half == QuadraticNumber(1));

    // Both factors are roots of x^2 - 3x + 1; their product is the
    // constant term.
    QuadraticNumber x = fibonacci_alpha();
    QuadraticNumber y = quad(3, 2, 1, 2, 5);
    CHECK(monic_quadratic(x, -3, 1).is_zero());
    CHECK(monic_quadratic(y, -3, 1).is_zero());
    CHECK(x * y == QuadraticNumber(1));

    // 121 < 125 settles (3 - sqrt 5)/2 < 2/5 by integer squaring.
    CHECK(BigInt(11 * 11) < BigInt(5 * 5 * 5));
    CHECK(compare(x, QuadraticNumber(Rational(2, 5))) < 0);

    CHECK_THROWS_AS(x + QuadraticNumber::sqrt_of(2), FieldMismatchError);
    CHECK_THROWS_AS(x / QuadraticNumber(0), DivisionByZeroError);
}

TEST_CASE("canonicalization folds square factors and trivial radicands") {
    CHECK(QuadraticNumber(Rational(0), Rational(1), 8) ==
          QuadraticNumber(Rational(0), Rational(2), 2));
    CHECK(QuadraticNumber(Rational(3), Rational(5), 1) == QuadraticNumber(8));
    CHECK(QuadraticNumber(Rational(3), Rational(5), 0) == QuadraticNumber(3));
    CHECK(QuadraticNumber(Rational(1, 2), Rational(0), 7).is_rational());
}

TEST_CASE("conjugation") {
    CHECK(conjugate(fibonacci_alpha()) == quad(3, 2, 1, 2, 5));
    CHECK(conjugate(QuadraticNumber(Rational(7, 3))) == QuadraticNumber(Rational(7, 3)));

    // Roots of x^2 + 2x - 1 form the conjugate pair sqrt(2) - 1, -sqrt(2) - 1.
    QuadraticNumber r = quad(-1, 1, 1, 1, 2);
    QuadraticNumber rc = quad(-1, 1, -1, 1, 2);
    CHECK(monic_quadratic(r, 2, -1).is_zero());
    CHECK(monic_quadratic(rc, 2, -1).is_zero());
    CHECK(conjugate(r) == rc);

    auto rng = seeded_rng(1);
    for (int i = 0; i < 100; ++i) {
        auto x = random_surd(rng, 30, 60);
        if (!x) continue;
        CHECK(conjugate(conjugate(*x)) == *x);
        CHECK((*x + conjugate(*x)).is_rational());
        CHECK((*x * conjugate(*x)).is_rational());
    }
}

TEST_CASE("floor and ceiling, decided exactly") {
    CHECK(floor_of(QuadraticNumber(Rational(7, 3))) == 2);
    CHECK(floor_of(QuadraticNumber::sqrt_of(2)) == 1);
    // 5 * (3 - sqrt 5)/2 = (15 - 5 sqrt 5)/2: 121 <= 125 < 169.
    CHECK(floor_of(quad(15, 2, -5, 2, 5)) == 1);

    CHECK(ceil_of(QuadraticNumber(2)) == 2);
    CHECK(ceil_of(QuadraticNumber::sqrt_of(2)) == 2);
    CHECK(ceil_of(fibonacci_alpha()) == 1);

    auto rng = seeded_rng(2);
    for (int i = 0; i < 200; ++i) {
        auto x = random_surd(rng, 40, 80);
        if (!x) continue;
        BigInt n = floor_of(*x);
        CHECK(compare(QuadraticNumber(Rational(n)), *x) <= 0);
        CHECK(compare(*x, QuadraticNumber(Rational(n + 1))) < 0);
        long shift = rand_in(rng, -10, 10);
        CHECK(floor_of(*x + QuadraticNumber(shift)) == n + shift);
        CHECK(ceil_of(*x) == -floor_of(-*x));
    }
}

TEST_CASE("continued fractions of the worked slopes") {
    ContinuedFraction fib = continued_fraction(fibonacci_alpha());
    CHECK(fib.preperiod == std::vector<BigInt>{0, 2});
    CHECK(fib.period == std::vector<BigInt>{1});

    ContinuedFraction third = continued_fraction(QuadraticNumber(Rational(1, 3)));
    CHECK(third.preperiod == std::vector<BigInt>{0, 3});
    CHECK(third.period.empty());

    // sqrt(2) - 1 satisfies x = 1/(2 + x); substitution confirms the
    // purely periodic digit 2.
    QuadraticNumber r = quad(-1, 1, 1, 1, 2);
    CHECK(QuadraticNumber(1) / (QuadraticNumber(2) + r) == r);
    ContinuedFraction cf = continued_fraction(r);
    CHECK(cf.preperiod == std::vector<BigInt>{0});
    CHECK(cf.period == std::vector<BigInt>{2});

    CHECK_THROWS_AS(continued_fraction(QuadraticNumber(2)), DomainError);
    CHECK_THROWS_AS(continued_fraction(fibonacci_alpha(), 1), ResourceError);
}

TEST_CASE("continued fractions terminate and refold close to the input") {
    auto rng = seeded_rng(3);
    int tested = 0;
    for (int i = 0; tested < 1000 && i < 20000; ++i) {
        auto x = random_surd(rng, 50, 50);
        if (!x) continue;
        ++tested;
        ContinuedFraction cf = continued_fraction(*x);
        REQUIRE(cf.is_periodic());
        std::vector<BigInt> digits = cf.preperiod;
        for (int rep = 0; rep < 40; ++rep)
            digits.insert(digits.end(), cf.period.begin(), cf.period.end());
        double refolded = fold_digits(digits).to_double();
        CHECK(std::abs(refolded - x->to_double()) < 1e-12);
    }
    CHECK(tested == 1000);
}

TEST_CASE("sturm numbers by the conjugate criterion") {
    CHECK(is_sturm_number(fibonacci_alpha()));
    CHECK_FALSE(is_sturm_number(QuadraticNumber(Rational(1, 2))));

    // (sqrt 5 - 1)/2 is a root of x^2 + x - 1; its conjugate
    // (-sqrt 5 - 1)/2 is negative.
    QuadraticNumber g = golden_minus_one();
    CHECK(monic_quadratic(g, 1, -1).is_zero());
    CHECK(conjugate(g).sign() < 0);
    CHECK(is_sturm_number(g));

    CHECK_FALSE(is_sturm_number(QuadraticNumber::sqrt_of(2))); // not in (0,1)
    // (2 + sqrt 2)/4 has conjugate (2 - sqrt 2)/4 inside [0,1].
    CHECK_FALSE(is_sturm_number(quad(1, 2, 1, 4, 2)));
}

TEST_CASE("substitution invariance of (alpha, rho)") {
    QuadraticNumber alpha = fibonacci_alpha();
    CHECK(is_substitution_invariant(alpha, golden_minus_one())); // boundary case
    CHECK(is_substitution_invariant(alpha, alpha));

    // rho = 3 alpha - 1: its conjugate 3 conj(alpha) - 1 exceeds
    // conj(alpha) because conj(alpha) > 1/2.
    QuadraticNumber rho = QuadraticNumber(3) * alpha - QuadraticNumber(1);
    CHECK(compare(conjugate(alpha), QuadraticNumber(Rational(1, 2))) > 0);
    CHECK_FALSE(is_substitution_invariant(alpha, rho));

    CHECK_THROWS_AS(is_substitution_invariant(QuadraticNumber(2), alpha), DomainError);
    CHECK_THROWS_AS(is_substitution_invariant(alpha, QuadraticNumber(2)), DomainError);
}

TEST_CASE("invariant-slope classification of expansions") {
    SturmForm fib = cf_sturm_form(fibonacci_alpha());
    CHECK(fib.slope == SlopeCase::Small);
    CHECK(fib.a0 == 1);
    CHECK(fib.k() == 1);
    CHECK(fib.period_digits == std::vector<BigInt>{1});

    // 1 - alpha shares the digits under the large-slope shape.
    SturmForm large = cf_sturm_form(golden_minus_one());
    CHECK(large.slope == SlopeCase::Large);
    CHECK(large.a0 == 1);
    CHECK(large.period_digits == std::vector<BigInt>{1});

    // The Pell slope expands as [0; 3, (2)]; the matched form reports
    // a0 = 2 with cycle [2], and the raw expansion rides along.
    SturmForm pell = cf_sturm_form(pell_alpha());
    CHECK(pell.slope == SlopeCase::Small);
    CHECK(pell.a0 == 2);
    CHECK(pell.period_digits == std::vector<BigInt>{2});
    CHECK(pell.raw.preperiod == std::vector<BigInt>{0, 3});
    CHECK(pell.raw.period == std::vector<BigInt>{2});

    CHECK_FALSE(try_cf_sturm_form(QuadraticNumber(Rational(2, 5))).has_value());
    CHECK_THROWS_AS(cf_sturm_form(quad(1, 2, 1, 4, 2)), ClassificationError);
}

TEST_CASE("classification agrees with the conjugate criterion at desk scale") {
    int sturm_count = 0, total = 0;
    for (long d = 2; d <= 100; ++d) {
        if (squarefree_split(d).second != 1) continue; // skip non-squarefree
        for (long p = -20; p <= 20; ++p) {
            for (long q = 1; q <= 20; ++q) {
                QuadraticNumber x(Rational(p, q), Rational(1, q), d);
                if (x.sign() <= 0 || compare(x, QuadraticNumber(1)) >= 0) continue;
                ++total;
                bool sturm = is_sturm_number(x);
                bool classified = try_cf_sturm_form(x).has_value();
                REQUIRE_MESSAGE(sturm == classified,
                                "disagreement at (", p, " + sqrt(", d, "))/", q);
                if (sturm) {
                    ++sturm_count;
                    CHECK(is_substitution_invariant(x, x));
                }
            }
        }
    }
    CHECK(total > 1000);
    CHECK(sturm_count > 100);
}
