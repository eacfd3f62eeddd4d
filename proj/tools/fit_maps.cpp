// Development fitter for the y parts of the elementary parameter maps.
// Enumerates p in {+1,-1}, q, r in [-3, 3] and keeps the candidates whose
// predicted image parameters reproduce psi_i(s_{alpha,rho}) exactly on
// 300-symbol prefixes over a sample grid, against both the floor and the
// ceiling representative of the image.  Prints the survivors.
#include <iostream>
#include <vector>

#include "sturmkit/contfrac.hpp"
#include "sturmkit/morphism.hpp"
#include "sturmkit/solver.hpp"
#include "sturmkit/words.hpp"
#include "sturmkit/grammar.hpp"

using namespace sturmkit;

namespace {

QuadraticNumber quad(long an, long ad, long bn, long bd, long d) {
    return QuadraticNumber(Rational(an, ad), Rational(bn, bd), d);
}

QuadraticNumber mod1(const QuadraticNumber& x) {
    return x - QuadraticNumber(Rational(floor_of(x)));
}

struct Sample {
    QuadraticNumber alpha, rho;
    Word floor_word, ceil_word; // inputs, 300 symbols
};

} // namespace

int main() {
    std::vector<QuadraticNumber> alphas = {
        quad(3, 2, -1, 2, 5),  // (3-sqrt5)/2
        quad(1, 1, -1, 2, 2),  // (2-sqrt2)/2
        quad(-1, 1, 1, 1, 2),  // sqrt2-1
        quad(-3, 2, 1, 2, 13), // (sqrt13-3)/2
        quad(-1, 2, 1, 2, 3),  // (sqrt3-1)/2
        quad(5, 6, -1, 6, 13), // (5-sqrt13)/6
        quad(2, 1, -1, 1, 3),  // 2-sqrt3
        quad(1, 1, -1, 3, 3),  // 1-sqrt3/3
        quad(-1, 6, 1, 6, 13), // (sqrt13-1)/6
        quad(-1, 2, 1, 2, 5),  // (sqrt5-1)/2   (large slope)
        quad(0, 1, 1, 2, 2),   // sqrt2/2       (large slope)
        quad(3, 2, -1, 2, 3),  // (3-sqrt3)/2   (large slope)
    };

    const std::size_t n = 300;
    std::vector<Sample> samples;
    for (const auto& a : alphas) {
        std::vector<QuadraticNumber> rhos = {
            a,
            QuadraticNumber(0),
            QuadraticNumber(1) - a,
            QuadraticNumber(Rational(1, 2)),
            QuadraticNumber(Rational(1, 3)),
            a / QuadraticNumber(2),
            mod1(a * QuadraticNumber(2)),
        };
        for (const auto& r : rhos) {
            if (r.sign() < 0 || compare(r, QuadraticNumber(1)) >= 0) continue;
            samples.push_back({a, r, sturmian_floor(a, r, n), sturmian_ceil(a, r, n)});
        }
    }
    std::cout << samples.size() << " samples\n";

    for (int i = 1; i <= 8; ++i) {
        BinaryMorphism psi = morphisms::psi(i);
        FracLinMap base = elementary_map(i); // x part is already exact
        std::vector<Word> images, images_ceil;
        for (const auto& s : samples) {
            images.push_back(psi.apply(s.floor_word).prefix(n));
            images_ceil.push_back(psi.apply(s.ceil_word).prefix(n));
        }
        std::cout << "psi" << i << " x-part: (" << base.a << "," << base.b << "," << base.c
                  << "," << base.d << ")\n";
        for (int p : {1, -1}) {
            for (int q = -3; q <= 3; ++q) {
                for (int r = -3; r <= 3; ++r) {
                    FracLinMap cand = base;
                    cand.p = p, cand.q = q, cand.r = r;
                    bool ok = true;
                    int f_only = 0, c_only = 0, both = 0;
                    int cf_only = 0, cc_only = 0, cboth = 0;
                    for (std::size_t k = 0; k < samples.size() && ok; ++k) {
                        QuadraticNumber x2 = apply_x(cand, samples[k].alpha);
                        QuadraticNumber y2 = mod1(apply_y(cand, samples[k].alpha, samples[k].rho));
                        Word tf = sturmian_floor(x2, y2, n);
                        Word tc = sturmian_ceil(x2, y2, n);
                        bool mf = images[k] == tf, mc = images[k] == tc;
                        if (!mf && !mc) { ok = false; break; }
                        f_only += mf && !mc;
                        c_only += mc && !mf;
                        both += mf && mc;
                        bool gf = images_ceil[k] == tf, gc = images_ceil[k] == tc;
                        cf_only += gf && !gc;
                        cc_only += gc && !gf;
                        cboth += gf && gc;
                    }
                    if (ok) {
                        std::cout << "  y=(" << p << "," << q << "," << r << ")"
                                  << " floor_only=" << f_only << " ceil_only=" << c_only
                                  << " both=" << both << " | on-ceiling-input: f=" << cf_only
                                  << " c=" << cc_only << " both=" << cboth << "\n";
                    }
                }
            }
        }
    }
    return 0;
}
