#include "sturmkit/find.hpp"

#include "sturmkit/contfrac.hpp"
#include "sturmkit/words.hpp"

namespace sturmkit {

namespace {

// Lexicographic enumeration of the words of one depth over an ordered
// label pair; stops early when the visitor returns a result.
template <typename Visit>
std::optional<FixerResult> scan_words(const std::pair<int, int>& labels, int depth, Visit visit) {
    if (depth > 62) throw ResourceError("search depth too large");
    PsiWord w(depth, labels.first);
    for (unsigned long long mask = 0; mask < (1ull << depth); ++mask) {
        for (int i = 0; i < depth; ++i)
            w[i] = (mask >> (depth - 1 - i)) & 1 ? labels.second : labels.first;
        if (auto hit = visit(w)) return hit;
    }
    return std::nullopt;
}

PsiWord exchange_labels(const PsiWord& word) {
    PsiWord out;
    out.reserve(word.size());
    for (int i : word) out.push_back(i <= 4 ? i + 4 : i - 4);
    return out;
}

PsiWord reverse_labels(const PsiWord& word) {
    // Time reversal of each elementary factor: 2i-1 <-> 2i.
    PsiWord out;
    out.reserve(word.size());
    for (int i : word) out.push_back(i % 2 ? i + 1 : i - 1);
    return out;
}

} // namespace

FixerResult find_fixing_morphism(const QuadraticNumber& alpha, RhoKind rho_kind, bool ceiling,
                                 int max_depth) {
    if (!is_sturm_number(alpha))
        throw DomainError("slope is not a Sturm number");
    bool dual = compare(alpha, QuadraticNumber(Rational(1, 2))) > 0;
    QuadraticNumber base = dual ? QuadraticNumber(1) - alpha : alpha;

    auto solve_quietly = [](const PsiWord& w) -> std::optional<std::pair<QuadraticNumber, QuadraticNumber>> {
        try {
            return solve_parameters(word_map(w));
        } catch (const NoFixedPointError&) {
            return std::nullopt;
        } catch (const AmbiguousRhoError&) {
            return std::nullopt;
        }
    };

    for (int depth = 1; depth <= max_depth; ++depth) {
        std::optional<FixerResult> hit;
        switch (rho_kind) {
            case RhoKind::Zero: {
                // Fixers of s_{alpha,0} live over {psi3, psi8}; the
                // exchange-conjugate pair {psi4, psi7} fixes the ceiling
                // word.  Both monoids cover all slopes.
                std::pair<int, int> labels = ceiling ? std::make_pair(4, 7) : std::make_pair(3, 8);
                hit = scan_words(labels, depth, [&](const PsiWord& w) -> std::optional<FixerResult> {
                    auto sol = solve_quietly(w);
                    if (!sol || !(sol->first == alpha) || !sol->second.is_zero())
                        return std::nullopt;
                    BinaryMorphism m = to_morphism(w);
                    if (!is_fixed_by(m, alpha, QuadraticNumber(0), 300, ceiling))
                        return std::nullopt;
                    return FixerResult{w, m, false, alpha, QuadraticNumber(0)};
                });
                break;
            }
            case RhoKind::Alpha: {
                hit = scan_words({3, 1}, depth, [&](const PsiWord& w) -> std::optional<FixerResult> {
                    auto sol = solve_quietly(w);
                    if (!sol || !(sol->first == base) || !(sol->second == base))
                        return std::nullopt;
                    PsiWord word = dual ? exchange_labels(w) : w;
                    BinaryMorphism m = to_morphism(word);
                    if (!is_fixed_by(m, alpha, alpha, 300, ceiling)) return std::nullopt;
                    return FixerResult{word, m, false, alpha, alpha};
                });
                break;
            }
            case RhoKind::OneMinusAlpha: {
                // Squares of time-reversed fixers of the characteristic
                // word fix both representatives at rho = 1 - alpha.
                hit = scan_words({3, 1}, depth, [&](const PsiWord& w) -> std::optional<FixerResult> {
                    auto sol = solve_quietly(w);
                    if (!sol || !(sol->first == base) || !(sol->second == base))
                        return std::nullopt;
                    PsiWord word = reverse_labels(w);
                    if (dual) word = exchange_labels(word);
                    BinaryMorphism half = to_morphism(word);
                    BinaryMorphism m = compose(half, half);
                    QuadraticNumber rho = QuadraticNumber(1) - alpha;
                    if (!is_fixed_by(m, alpha, rho, 300, false)) return std::nullopt;
                    if (!is_fixed_by(m, alpha, rho, 300, true)) return std::nullopt;
                    return FixerResult{word, m, true, alpha, rho};
                });
                break;
            }
        }
        if (hit) return *hit;
    }
    throw NotFoundError("no fixing morphism within the depth bound");
}

} // namespace sturmkit
