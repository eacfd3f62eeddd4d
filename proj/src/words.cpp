#include "sturmkit/words.hpp"

namespace sturmkit {

namespace {

void require_slope(const QuadraticNumber& alpha) {
    if (alpha.sign() <= 0 || compare(alpha, QuadraticNumber(1)) >= 0)
        throw DomainError("slope must satisfy 0 < alpha < 1");
}

QuadraticNumber reduce_mod_one(const QuadraticNumber& x) {
    return x - QuadraticNumber(Rational(floor_of(x)));
}

Word rotation_word(const QuadraticNumber& alpha, const QuadraticNumber& rho, std::size_t n,
                   bool ceiling) {
    require_slope(alpha);
    QuadraticNumber t = reduce_mod_one(rho);
    Word w;
    BigInt prev = ceiling ? ceil_of(t) : floor_of(t);
    for (std::size_t k = 0; k < n; ++k) {
        t += alpha;
        BigInt cur = ceiling ? ceil_of(t) : floor_of(t);
        w.push_back(static_cast<int>(cur - prev));
        prev = cur;
    }
    return w;
}

} // namespace

Word sturmian_floor(const QuadraticNumber& alpha, const QuadraticNumber& rho, std::size_t n) {
    return rotation_word(alpha, rho, n, false);
}

Word sturmian_ceil(const QuadraticNumber& alpha, const QuadraticNumber& rho, std::size_t n) {
    return rotation_word(alpha, rho, n, true);
}

Word characteristic_word(const QuadraticNumber& alpha, std::size_t n) {
    require_slope(alpha);
    if (alpha.is_rational()) throw DomainError("characteristic word requires irrational slope");
    return sturmian_floor(alpha, alpha, n);
}

std::optional<BigInt> lozenge_index(const QuadraticNumber& alpha, const QuadraticNumber& rho) {
    require_slope(alpha);
    if (alpha.is_rational())
        throw DomainError("lozenge analysis requires irrational slope");
    if (rho.sign() < 0 || compare(rho, QuadraticNumber(1)) > 0)
        throw DomainError("lozenge analysis requires 0 <= rho <= 1");
    if (!rho.is_rational() && rho.radicand() != alpha.radicand())
        throw FieldMismatchError("rho does not lie in Q(alpha)");

    // rho = p + q*alpha, so m*alpha + rho = p + (m+q)*alpha is a
    // non-negative integer iff m = -q and p is a non-negative integer.
    Rational q = rho.radical_coefficient() / alpha.radical_coefficient();
    Rational p = rho.rational_part() - q * alpha.rational_part();
    if (!q.is_integer() || q.sign() > 0) return std::nullopt;
    if (!p.is_integer() || p.sign() < 0) return std::nullopt;
    return -q.numerator();
}

LozengeReport lozenge_report(const QuadraticNumber& alpha, const QuadraticNumber& rho,
                             std::size_t n) {
    LozengeReport report;
    report.index = lozenge_index(alpha, rho);
    if (report.index) {
        BigInt needed = *report.index + 2;
        if (BigInt(n) < needed) throw DomainError("prefix too short to contain the lozenge index");
    }
    Word lo = sturmian_floor(alpha, rho, n);
    Word hi = sturmian_ceil(alpha, rho, n);
    for (std::size_t i = 0; i < n; ++i)
        if (lo.at(i) != hi.at(i)) report.differing_positions.push_back(i);
    return report;
}

std::pair<Word, Word> prepended_pair(const QuadraticNumber& alpha, std::size_t n) {
    Word c = n > 2 ? characteristic_word(alpha, n - 2) : characteristic_word(alpha, 0);
    Word lo = Word::from_text("10") + c;
    Word hi = Word::from_text("01") + c;
    return {lo.prefix(n), hi.prefix(n)};
}

} // namespace sturmkit
