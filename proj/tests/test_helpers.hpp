#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>

#include "hytet/types.hpp"

namespace testutil {

// Deterministic cross-platform generator (splitmix64).
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

// Adaptive Simpson quadrature for smooth real integrands.
inline double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                          double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    // depth 24 halves the panel below any smooth integrand's resolution
    // scale; past it the acceptance test only chases rounding noise
    if (depth > 24 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, 0);
}

// Independent Lobachevsky oracle: -int_0^t log|2 sin u| du with the log(2u)
// part integrated in closed form and the smooth remainder by quadrature.
inline double lobachevsky_quadrature(double t) {
    if (t == 0.0) return 0.0;
    auto g = [](double u) { return u == 0.0 ? 0.0 : std::log(std::sin(u) / u); };
    return -(t * std::log(2.0 * std::abs(t)) - t + integrate(g, 0.0, t));
}

inline hytet::cplx random_annulus(Rng& rng, double rlo, double rhi) {
    const double r = rng.uniform(rlo, rhi);
    const double phi = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    return {r * std::cos(phi), r * std::sin(phi)};
}

}  // namespace testutil

#include "hytet/errors.hpp"
#include "hytet/gram.hpp"

namespace testutil {

// Length tuples realizable on both routes: Gram signature (3,1) and a
// converted angle tuple that classifies as hyperbolic (skewed draws can sit
// so close to the Euclidean wall that the angle-side tolerance rejects them).
inline hytet::Lengths6 random_tetrahedron(Rng& rng, double lo = 0.3, double hi = 2.5) {
    for (;;) {
        hytet::Lengths6 l;
        for (int i = 0; i < 6; ++i) l.v[i] = rng.uniform(lo, hi);
        const hytet::Signature s = hytet::signature(hytet::gram_from_lengths(l));
        if (s.positive != 3 || s.negative != 1) continue;
        try {
            if (hytet::classify(hytet::lengths_to_angles(l)) != hytet::Shape::Hyperbolic) continue;
        } catch (const hytet::error&) {
            continue;
        }
        return l;
    }
}

}  // namespace testutil
