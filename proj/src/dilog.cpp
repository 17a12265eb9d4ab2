// Complex logarithm and dilogarithm with pinned branch conventions, the
// Lobachevsky function, and piecewise-linear analytic continuation of Li2.
//
// Branch conventions used throughout the library:
//   clog: Im in (-pi, pi]           (the -pi ray is folded onto +pi)
//   li2:  cut on [1, inf), value on the cut is the limit from below,
//         Im li2(x) = -pi log x for x > 1.

#include "hytet/dilog.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "hytet/errors.hpp"

namespace hytet {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kPiSqOver6 = kPi * kPi / 6.0;
const cplx kTwoPiI{0.0, 2.0 * kPi};

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Power series sum z^k / k^2 on |z| <= 0.8.  Terminates when the term drops
// below 1e-17 of the partial sum; capped at 1e4 terms (never reached inside
// the disk).
cplx li2_series(cplx z) {
    cplx term = z;
    cplx sum = z;
    for (int k = 2; k <= 10000; ++k) {
        term *= z;
        const cplx add = term / double(k * k);
        sum += add;
        if (std::norm(add) < 1e-34 * std::norm(sum)) break;
    }
    return sum;
}

cplx li2_impl(cplx z, int depth) {
    if (depth > 24) throw evaluation_error("li2: argument transformation did not terminate");

    if (std::norm(z) <= 0.64) return li2_series(z);

    const cplx omz = 1.0 - z;
    if (std::norm(omz) <= 0.64) {
        if (omz == 0.0) return cplx(kPiSqOver6, 0.0);
        return kPiSqOver6 - clog(z) * clog(omz) - li2_series(omz);
    }

    if (std::norm(z) >= 1.5625) {  // |z| >= 1.25: inversion, |1/z| <= 0.8
        const cplx lz = clog(-z);
        return -kPiSqOver6 - 0.5 * lz * lz - li2_impl(1.0 / z, depth + 1);
    }

    const cplx w = z / (z - 1.0);  // Landen image; |1-z| > 0.8 here
    if (std::norm(w) <= 0.64) {
        const cplx l = clog(omz);
        return -0.5 * l * l - li2_series(w);
    }

    // Annulus region near exp(+-i pi/3) where no anharmonic map reaches the
    // series disk: halve the argument angle once and recurse.
    const cplx s = std::sqrt(z);
    return 2.0 * (li2_impl(s, depth + 1) + li2_impl(-s, depth + 1));
}

// Sign of the real-axis side for cut bookkeeping.  Points exactly on the
// axis count as the lower side, matching the cut-value convention of li2.
int axis_side(double im) { return im > 0.0 ? +1 : -1; }

struct AxisCrossing {
    bool crossed = false;
    double x = 0.0;   // crossing abscissa
    int direction = 0;  // +1 downward (upper -> lower), -1 upward
};

AxisCrossing segment_axis_crossing(cplx a, cplx b) {
    AxisCrossing out;
    const int sa = axis_side(a.imag());
    const int sb = axis_side(b.imag());
    if (sa == sb) return out;
    const double t = a.imag() / (a.imag() - b.imag());
    out.crossed = true;
    out.x = a.real() + t * (b.real() - a.real());
    out.direction = sa > 0 ? +1 : -1;
    return out;
}

std::vector<double> even_zeta_table() {
    // zeta(2n) for n = 1..40; the first three from the classical pi-power
    // forms, the rest by direct summation (tails < 1e-22 at k = 4000).
    std::vector<double> z;
    z.push_back(kPi * kPi / 6.0);
    z.push_back(std::pow(kPi, 4) / 90.0);
    z.push_back(std::pow(kPi, 6) / 945.0);
    for (int n = 4; n <= 40; ++n) {
        double s = 0.0;
        for (int k = 4000; k >= 1; --k) s += std::pow(double(k), -2.0 * n);
        z.push_back(s);
    }
    return z;
}

}  // namespace

cplx clog(cplx z) {
    if (!finite(z)) throw domain_error("clog: non-finite argument");
    if (z == 0.0) throw domain_error("clog: zero argument");
    double im = std::atan2(z.imag(), z.real());
    if (im == -kPi) im = kPi;
    return {std::log(std::abs(z)), im};
}

cplx li2(cplx z) {
    if (!finite(z)) throw domain_error("li2: non-finite argument");
    if (z == 0.0) return {0.0, 0.0};
    return li2_impl(z, 0);
}

double lobachevsky(double theta) {
    if (!std::isfinite(theta)) throw domain_error("lobachevsky: non-finite argument");
    // Odd and pi-periodic: reduce to [-pi/2, pi/2].
    double t = theta - kPi * std::round(theta / kPi);
    if (t == 0.0) return 0.0;

    static const std::vector<double> zeta2n = even_zeta_table();
    const double r = (t / kPi) * (t / kPi);  // <= 1/4 after reduction
    double p = r;
    double sum = 0.0;
    for (std::size_t n = 1; n <= zeta2n.size(); ++n) {
        const double term = zeta2n[n - 1] * t * p / (double(n) * double(2 * n + 1));
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
        p *= r;
    }
    return t - t * std::log(std::abs(2.0 * t)) + sum;
}

void Li2Tracker::advance(cplx a, cplx b) {
    if (!finite(a) || !finite(b)) throw continuation_error("li2 continuation: non-finite path point");
    const AxisCrossing cr = segment_axis_crossing(a, b);
    if (!cr.crossed) return;
    if (std::abs(cr.x - 1.0) <= 1e-9)
        throw continuation_error("li2 continuation: crossing too close to the branch point 1");
    if (cr.x > 1.0) {
        // Crossing the dilogarithm cut: the continued branch gains -+ 2 pi i log z.
        c_ += cr.direction > 0 ? kTwoPiI : -kTwoPiI;
    } else if (cr.x < 0.0 && c_ != 0.0) {
        if (std::abs(cr.x) <= 1e-12)
            throw continuation_error("li2 continuation: correction term crosses log singularity");
        // The c*clog(z) term jumps across the log cut; fold the jump into d.
        d_ += (cr.direction > 0 ? 1.0 : -1.0) * c_ * kTwoPiI;
    }
}

cplx Li2Tracker::value(cplx z) const {
    cplx out = li2(z);
    if (c_ != 0.0) out += c_ * clog(z);
    return out + d_;
}

void LogTracker::advance(cplx a, cplx b) {
    if (!finite(a) || !finite(b)) throw continuation_error("log continuation: non-finite path point");
    const AxisCrossing cr = segment_axis_crossing(a, b);
    if (!cr.crossed || cr.x > 0.0) return;
    if (std::abs(cr.x) <= 1e-12)
        throw continuation_error("log continuation: crossing at the singularity");
    winding_ += cr.direction;
}

cplx LogTracker::value(cplx z) const {
    return clog(z) + double(winding_) * kTwoPiI;
}

cplx li2_continued(std::span<const cplx> path) {
    if (path.empty()) throw continuation_error("li2 continuation: empty path");
    for (const cplx& z : path) {
        if (!finite(z)) throw continuation_error("li2 continuation: non-finite path point");
        if (z == cplx(1.0, 0.0)) throw continuation_error("li2 continuation: path touches the branch point 1");
    }
    Li2Tracker tracker;
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (std::abs(path[i] - path[i - 1]) > 0.5)
            throw continuation_error("li2 continuation: path step exceeds the certified bound");
        tracker.advance(path[i - 1], path[i]);
    }
    return tracker.value(path.back());
}

}  // namespace hytet
