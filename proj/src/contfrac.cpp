#include "sturmkit/contfrac.hpp"

#include <map>
#include <utility>

namespace sturmkit {

const BigInt& ContinuedFraction::digit(std::size_t i) const {
    if (i < preperiod.size()) return preperiod[i];
    if (period.empty()) throw DomainError("finite expansion has no digit at this position");
    return period[(i - preperiod.size()) % period.size()];
}

namespace {

// Compares sqrt(D) with the integer c, exactly.
int cmp_sqrt(const BigInt& D, const BigInt& c) {
    if (c < 0) return 1;
    BigInt c2 = c * c;
    if (D == c2) return 0;
    return D > c2 ? 1 : -1;
}

// Exact floor of (P + sqrt(D)) / Q for Q != 0, sqrt(D) irrational.
BigInt floor_surd(const BigInt& P, const BigInt& Q, const BigInt& D) {
    BigInt s = isqrt(D);
    BigInt n = Q > 0 ? floor_div(P + s, Q) : floor_div(-(P + s), -Q);
    // n <= (P + sqrt(D))/Q  <=>  sqrt(D) >= nQ - P (for Q > 0), flipped for Q < 0.
    auto at_least = [&](const BigInt& m) {
        BigInt t = m * Q - P;
        return Q > 0 ? cmp_sqrt(D, t) >= 0 : cmp_sqrt(D, t) <= 0;
    };
    while (!at_least(n)) --n;
    while (at_least(n + 1)) ++n;
    return n;
}

ContinuedFraction rational_expansion(const Rational& x) {
    ContinuedFraction cf;
    BigInt num = x.numerator(), den = x.denominator();
    BigInt a0 = floor_div(num, den);
    cf.preperiod.push_back(a0);
    num -= a0 * den;
    while (num != 0) {
        std::swap(num, den);
        BigInt a = floor_div(num, den);
        cf.preperiod.push_back(a);
        num -= a * den;
    }
    return cf;
}

} // namespace

ContinuedFraction continued_fraction(const QuadraticNumber& x, int max_steps) {
    if (x.sign() <= 0 || compare(x, QuadraticNumber(1)) >= 0)
        throw DomainError("continued_fraction requires 0 < x < 1");
    if (x.is_rational()) return rational_expansion(x.rational_part());

    // Normalize x = (A + B sqrt(d)) / C with integer A, B > 0, C != 0,
    // then scale so that Q divides D - P^2 (the invariant of the surd
    // recurrence P' = aQ - P, Q' = (D - P'^2)/Q).
    const Rational& ra = x.rational_part();
    const Rational& rb = x.radical_coefficient();
    BigInt ad = ra.denominator(), bd = rb.denominator();
    BigInt g = big_gcd(ad, bd);
    BigInt C = ad / g * bd;
    BigInt A = ra.numerator() * (C / ad);
    BigInt B = rb.numerator() * (C / bd);
    if (B < 0) {
        A = -A;
        B = -B;
        C = -C;
    }
    BigInt P = A;
    BigInt D = B * B * x.radicand();
    BigInt Q = C;
    if ((D - P * P) % Q != 0) {
        BigInt scale = Q < 0 ? -Q : Q;
        P *= scale;
        D *= scale * scale;
        Q *= scale;
    }

    ContinuedFraction cf;
    std::vector<BigInt> digits;
    std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
    for (int step = 0; step < max_steps; ++step) {
        if (step > 0) {
            // States are complete quotients from digit position 1 on; a
            // value (P + sqrt(D))/Q recurs iff the state pair recurs.
            auto [it, fresh] = seen.emplace(std::make_pair(P, Q), digits.size());
            if (!fresh) {
                std::size_t start = it->second;
                cf.preperiod.assign(digits.begin(), digits.begin() + start);
                cf.period.assign(digits.begin() + start, digits.end());
                return cf;
            }
        }
        BigInt a = floor_surd(P, Q, D);
        digits.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    throw ResourceError("continued fraction did not close within the step bound");
}

bool is_sturm_number(const QuadraticNumber& x) {
    if (x.is_rational()) return false;
    if (x.sign() <= 0 || compare(x, QuadraticNumber(1)) >= 0) return false;
    QuadraticNumber c = x.conjugate();
    return c.sign() < 0 || compare(c, QuadraticNumber(1)) > 0;
}

bool is_substitution_invariant(const QuadraticNumber& alpha, const QuadraticNumber& rho) {
    if (alpha.sign() <= 0 || compare(alpha, QuadraticNumber(1)) >= 0)
        throw DomainError("is_substitution_invariant requires 0 < alpha < 1");
    if (rho.sign() < 0 || compare(rho, QuadraticNumber(1)) > 0)
        throw DomainError("is_substitution_invariant requires 0 <= rho <= 1");
    if (alpha.is_rational()) return false;
    if (!rho.is_rational() && rho.radicand() != alpha.radicand()) return false;

    QuadraticNumber ca = alpha.conjugate();
    QuadraticNumber cr = rho.conjugate();
    QuadraticNumber one(1);
    if (compare(ca, one) > 0)
        return compare(one - ca, cr) <= 0 && compare(cr, ca) <= 0;
    if (ca.sign() < 0)
        return compare(ca, cr) <= 0 && compare(cr, one - ca) <= 0;
    return false;
}

namespace {

// Checks that the digit stream is purely periodic from position `start`
// with period p, i.e. digit(i) = digit(i + p) for all i >= start.  Beyond
// the preperiod this reduces to m | p, so a bounded scan suffices.
bool periodic_from(const ContinuedFraction& cf, std::size_t start, std::size_t p) {
    if (p % cf.period.size() != 0) return false;
    std::size_t limit = cf.preperiod.size() + p;
    for (std::size_t i = start; i < limit; ++i)
        if (cf.digit(i) != cf.digit(i + p)) return false;
    return true;
}

} // namespace

std::optional<SturmForm> try_cf_sturm_form(const QuadraticNumber& x, int max_steps) {
    if (x.is_rational()) return std::nullopt;
    if (x.sign() <= 0 || compare(x, QuadraticNumber(1)) >= 0) return std::nullopt;

    ContinuedFraction cf = continued_fraction(x, max_steps);
    bool small = compare(x, QuadraticNumber(Rational(1, 2))) < 0;
    // alpha < 1/2 gives digit(1) >= 2 and shape [0; 1+a0, cycle from pos 2];
    // alpha > 1/2 gives digit(1) = 1 and shape [0; 1, a0, cycle from pos 3].
    std::size_t start = small ? 2 : 3;
    BigInt a0 = small ? cf.digit(1) - 1 : cf.digit(2);
    if (a0 < 1) return std::nullopt;

    std::size_t m = cf.period.size();
    for (std::size_t rep = 1; rep <= 3; ++rep) {
        std::size_t p = rep * m;
        if (!periodic_from(cf, start, p)) continue;
        if (cf.digit(start + p - 1) < a0) continue;
        SturmForm form;
        form.slope = small ? SlopeCase::Small : SlopeCase::Large;
        form.a0 = a0;
        form.period_digits.reserve(p);
        for (std::size_t i = 0; i < p; ++i) form.period_digits.push_back(cf.digit(start + i));
        form.raw = std::move(cf);
        return form;
    }
    return std::nullopt;
}

SturmForm cf_sturm_form(const QuadraticNumber& x, int max_steps) {
    auto form = try_cf_sturm_form(x, max_steps);
    if (!form)
        throw ClassificationError("expansion does not match an invariant-slope shape");
    return *std::move(form);
}

} // namespace sturmkit
