// The volume formula engine.
//
// For parameters a1..a6 and a critical point z of
//   U = Li2(z) + Li2(a1 a2 a4 a5 z) + Li2(a1 a3 a4 a6 z) + Li2(a2 a3 a5 a6 z)
//     - Li2(-a1 a2 a3 z) - Li2(-a1 a5 a6 z) - Li2(-a2 a4 a6 z) - Li2(-a3 a4 a5 z)
// the function V = (i/4)[(U - z U_z log z)|_{z-} - (U - z U_z log z)|_{z+}]
// yields the tetrahedron volume: from dihedral angles (ak = exp(i Ak)) as
// -V, and from edge lengths (ak = -exp(l)) as V_l - sum l_i dV_l/dl_i.
//
// All multivaluedness is managed explicitly: principal branches first, with
// per-term analytic continuation from a regular reference tetrahedron as the
// certified fallback when the principal sheet is wrong.

#include "hytet/volume.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <utility>

#include "hytet/dilog.hpp"
#include "hytet/errors.hpp"

namespace hytet {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;
const cplx kIOver4{0.0, 0.25};

// a-index of the parameter carrying length l_i (a1 = -e^{l4} etc.).
int a_index_of_length(int i) { return (i + 3) % 6; }

// Positive / negative U arguments containing a given parameter index.
constexpr int kPlusArgs[6][2] = {{1, 2}, {1, 3}, {2, 3}, {1, 2}, {1, 3}, {2, 3}};
constexpr int kMinusArgs[6][2] = {{4, 5}, {4, 6}, {4, 7}, {6, 7}, {5, 7}, {5, 6}};

Lengths6 lengths_from_params(const ComplexParams& p) {
    Lengths6 l;
    for (int i = 0; i < 6; ++i) {
        const cplx a = p.a[a_index_of_length(i)];
        l.v[i] = std::log(-a.real());
    }
    return l;
}

Angles6 angles_from_params(const ComplexParams& p) {
    Angles6 a;
    for (int i = 0; i < 6; ++i) a.v[i] = std::atan2(p.a[i].imag(), p.a[i].real());
    return a;
}

std::pair<cplx, cplx> solve_quadratic(const QuadCoeffs& q) {
    const double scale = std::abs(q.q0) + std::abs(q.q1) + std::abs(q.q2);
    if (!(std::abs(q.q2) > 1e-14 * scale))
        throw degenerate_error("z_roots: quadratic degenerates (leading coefficient vanishes)");
    const cplx disc = q.q1 * q.q1 - 4.0 * q.q0 * q.q2;
    const cplx s = std::sqrt(disc);
    // Cancellation-free: form the larger-magnitude numerator, get the other
    // root from the product q0/q2.
    const cplx u = (std::real(std::conj(q.q1) * s) >= 0.0) ? q.q1 + s : q.q1 - s;
    if (u == 0.0) {  // q1 = 0, disc = 0
        const cplx r = std::sqrt(-q.q0 / q.q2);
        return {r, -r};
    }
    const cplx r1 = -u / (2.0 * q.q2);
    const cplx r2 = -2.0 * q.q0 / u;
    return {r1, r2};
}

double quad_residual(const QuadCoeffs& q, cplx z) {
    return std::abs((q.q2 * z + q.q1) * z + q.q0);
}

struct FdResult {
    double value = 0.0;        // Richardson-refined central difference
    double inconsistency = 0.0;  // |D(h) - D(h/2)|
};

FdResult central_difference(const std::function<double(const Lengths6&)>& f, const Lengths6& l,
                            int i, double h) {
    auto diff = [&](double step) {
        Lengths6 lp = l, lm = l;
        lp.v[i] += step;
        lm.v[i] -= step;
        return (f(lp) - f(lm)) / (2.0 * step);
    };
    const double d1 = diff(h);
    const double d2 = diff(0.5 * h);
    return {(4.0 * d2 - d1) / 3.0, std::abs(d2 - d1)};
}

struct PartialsOutcome {
    std::array<double, 6> value{};
    double max_reconcile_gap = 0.0;
};

// Analytic phi/psi log combination for dV_l/dl_i at the two roots, before
// the integer-multiple-of-pi/2 branch correction.
double analytic_partial_base(const ComplexParams& p, const ZPair& zp, int edge) {
    const auto f = u_multipliers(p);
    const int m = a_index_of_length(edge);
    auto combo = [&](cplx z) {
        cplx s{0.0, 0.0};
        for (int k : kPlusArgs[m]) s -= clog(1.0 - f[k] * z);
        for (int k : kMinusArgs[m]) s += clog(1.0 - f[k] * z);
        return s;
    };
    return std::real(kIOver4 * (combo(zp.z_minus) - combo(zp.z_plus)));
}

PartialsOutcome partials_impl(const Lengths6& l, const ComplexParams& p, const ZPair& zp,
                              const std::function<double(const Lengths6&)>& v_of_l) {
    PartialsOutcome out;
    for (int i = 0; i < 6; ++i) {
        const double base = analytic_partial_base(p, zp, i);
        // V''' grows like 1/l^2 as the tetrahedron shrinks (z- approaches the
        // dilogarithm branch point), so the step follows the optimal
        // (eps * l^2)^(1/3) scaling below l ~ 0.35.
        const double h = std::max(1e-8, std::min(1e-5, 2e-5 * std::cbrt(l.v[i] * l.v[i])));
        FdResult fd = central_difference(v_of_l, l, i, h);
        if (fd.inconsistency > 1e-3) {
            // A cut sits inside the stencil; shrink once.
            fd = central_difference(v_of_l, l, i, h / 10.0);
            if (fd.inconsistency > 1e-3)
                throw evaluation_error("partials_vl: finite-difference stencil straddles a branch cut");
        }
        const double k = std::round((fd.value - base) / (0.5 * kPi));
        const double corrected = base + k * 0.5 * kPi;
        const double gap = std::abs(corrected - fd.value);
        if (gap > 1e-4)
            throw branch_error("partials_vl: no integer branch correction matches the derivative");
        if (gap > 1e-7)
            throw branch_error("partials_vl: branch-corrected derivative fails reconciliation");
        out.value[i] = corrected;
        out.max_reconcile_gap = std::max(out.max_reconcile_gap, gap);
    }
    return out;
}

double dist_to_multiple(double x, double period) {
    const double r = x - period * std::round(x / period);
    return std::abs(r);
}

ComplexParams perturb_params(const ComplexParams& p) {
    ComplexParams out = p;
    for (auto& a : out.a) a *= (1.0 + 1e-9);
    return out;
}

// Derivative of z dU/dz, used to polish the quadratic roots on the exact
// stationarity condition z dU/dz in 2 pi i Z.  The quadratic coefficients
// cancel like rho^2 for shrinking tetrahedra, so the raw roots carry noise
// that the nearly-singular logarithms would amplify; two Newton steps on the
// analytic condition restore full precision.
cplx zdudz_prime(const ComplexParams& p, cplx z) {
    const auto f = u_multipliers(p);
    cplx s{0.0, 0.0};
    for (int k = 0; k < 8; ++k) {
        const cplx arg = 1.0 - f[k] * z;
        if (arg == 0.0) return {0.0, 0.0};
        s += (k < 4 ? 1.0 : -1.0) * f[k] / arg;
    }
    return s;
}

cplx polish_root(const ComplexParams& p, cplx z) {
    for (int iter = 0; iter < 4; ++iter) {
        cplx r;
        try {
            r = zdudz(p, z);
        } catch (const evaluation_error&) {
            return z;
        }
        const double k = std::round(r.imag() / kTwoPi);
        const cplx g = r - cplx(0.0, kTwoPi * k);
        if (std::abs(g) < 1e-13) break;
        const cplx gp = zdudz_prime(p, z);
        if (!(std::abs(gp) > 1e-8)) break;
        const cplx step = g / gp;
        if (std::abs(step) > 0.05 * (1.0 + std::abs(z))) break;  // polish only, never a jump
        z -= step;
    }
    return z;
}

cplx tracked_pass(const ComplexParams& p, const ComplexParams& ref, int steps) {
    QuadCoeffs q0 = quad_coeffs(ref);
    ZPair zp0 = z_roots(q0, ref);

    std::array<Li2Tracker, 8> li2_m{}, li2_p{};
    std::array<LogTracker, 8> log_m{}, log_p{};
    LogTracker logz_m{}, logz_p{};

    cplx zm = zp0.z_minus, zpl = zp0.z_plus;
    auto f = u_multipliers(ref);
    std::array<cplx, 8> wm{}, wp{};
    for (int k = 0; k < 8; ++k) {
        wm[k] = f[k] * zm;
        wp[k] = f[k] * zpl;
    }

    for (int s = 1; s <= steps; ++s) {
        const double t = double(s) / double(steps);
        ComplexParams pt;
        pt.origin = p.origin;
        for (int i = 0; i < 6; ++i) pt.a[i] = ref.a[i] + t * (p.a[i] - ref.a[i]);

        QuadCoeffs qt = quad_coeffs(pt);
        std::pair<cplx, cplx> roots;
        try {
            roots = solve_quadratic(qt);
        } catch (const degenerate_error&) {
            throw continuation_error("tracked evaluation: quadratic degenerates on the path");
        }
        // Pair the new roots with the tracked branches by continuity.
        const double keep = std::abs(roots.first - zm) + std::abs(roots.second - zpl);
        const double swap = std::abs(roots.first - zpl) + std::abs(roots.second - zm);
        const cplx zm_new = keep <= swap ? roots.first : roots.second;
        const cplx zp_new = keep <= swap ? roots.second : roots.first;

        const auto ft = u_multipliers(pt);
        for (int k = 0; k < 8; ++k) {
            const cplx wm_new = ft[k] * zm_new;
            const cplx wp_new = ft[k] * zp_new;
            li2_m[k].advance(wm[k], wm_new);
            li2_p[k].advance(wp[k], wp_new);
            log_m[k].advance(1.0 - wm[k], 1.0 - wm_new);
            log_p[k].advance(1.0 - wp[k], 1.0 - wp_new);
            wm[k] = wm_new;
            wp[k] = wp_new;
        }
        logz_m.advance(zm, zm_new);
        logz_p.advance(zpl, zp_new);
        zm = zm_new;
        zpl = zp_new;
    }

    // Polish the endpoint roots on the stationarity condition and carry the
    // trackers over the (tiny) correction segment.
    {
        const auto fe = u_multipliers(p);
        const cplx zm_p = polish_root(p, zm);
        const cplx zp_p = polish_root(p, zpl);
        for (int k = 0; k < 8; ++k) {
            const cplx wm_new = fe[k] * zm_p;
            const cplx wp_new = fe[k] * zp_p;
            li2_m[k].advance(wm[k], wm_new);
            li2_p[k].advance(wp[k], wp_new);
            log_m[k].advance(1.0 - wm[k], 1.0 - wm_new);
            log_p[k].advance(1.0 - wp[k], 1.0 - wp_new);
            wm[k] = wm_new;
            wp[k] = wp_new;
        }
        logz_m.advance(zm, zm_p);
        logz_p.advance(zpl, zp_p);
        zm = zm_p;
        zpl = zp_p;
    }

    for (int k = 0; k < 8; ++k) {
        if (wm[k] == cplx(1.0, 0.0) || wp[k] == cplx(1.0, 0.0))
            throw continuation_error("tracked evaluation: endpoint argument at the branch point");
    }

    auto assemble = [&](const std::array<Li2Tracker, 8>& li2tr, const std::array<LogTracker, 8>& logtr,
                        const LogTracker& logz, const std::array<cplx, 8>& w, cplx z) {
        cplx u{0.0, 0.0}, r{0.0, 0.0};
        for (int k = 0; k < 8; ++k) {
            const cplx term = li2tr[k].value(w[k]);
            const cplx lg = logtr[k].value(1.0 - w[k]);
            if (k < 4) {
                u += term;
                r -= lg;
            } else {
                u -= term;
                r += lg;
            }
        }
        return u - r * logz.value(z);
    };

    const cplx tm = assemble(li2_m, log_m, logz_m, wm, zm);
    const cplx tp = assemble(li2_p, log_p, logz_p, wp, zpl);
    return kIOver4 * (tm - tp);
}

cplx tracked_adaptive(const ComplexParams& p, const ComplexParams& ref) {
    cplx prev{0.0, 0.0};
    bool have_prev = false;
    for (int n = 64; n <= 32768; n *= 2) {
        const cplx v = tracked_pass(p, ref, n);
        if (have_prev && std::abs(v - prev) <= 1e-10 * (1.0 + std::abs(v))) return v;
        prev = v;
        have_prev = true;
    }
    throw continuation_error("tracked evaluation: value did not stabilize under path refinement");
}

double regular_angle_reference(const Angles6& a, Shape shape) {
    const double mean = std::accumulate(a.v.begin(), a.v.end(), 0.0) / 6.0;
    const double euclid = std::acos(1.0 / 3.0);
    if (shape == Shape::Hyperbolic) return std::clamp(mean, kPi / 3.0 + 1e-3, euclid - 1e-4);
    return std::clamp(mean, euclid + 1e-3, std::acos(-1.0 / 3.0) - 1e-3);
}

struct LengthsAttempt {
    cplx v{};
    std::array<double, 6> partials{};
    double volume = 0.0;
    double partial_gap = 0.0;
    bool tracked = false;
};

}  // namespace

ComplexParams params_from_angles(const Angles6& a) {
    validate(a);
    ComplexParams p;
    p.origin = ParamOrigin::FromAngles;
    for (int i = 0; i < 6; ++i) p.a[i] = cplx(std::cos(a.v[i]), std::sin(a.v[i]));
    return p;
}

ComplexParams params_from_lengths(const Lengths6& l) {
    validate(l);
    ComplexParams p;
    p.origin = ParamOrigin::FromLengths;
    p.a[0] = -std::exp(l.v[3]);
    p.a[1] = -std::exp(l.v[4]);
    p.a[2] = -std::exp(l.v[5]);
    p.a[3] = -std::exp(l.v[0]);
    p.a[4] = -std::exp(l.v[1]);
    p.a[5] = -std::exp(l.v[2]);
    return p;
}

QuadCoeffs quad_coeffs(const ComplexParams& p) {
    const auto& a = p.a;
    for (const cplx& ai : a)
        if (ai == 0.0) throw domain_error("quad_coeffs: zero parameter");
    const cplx prod = a[0] * a[1] * a[2] * a[3] * a[4] * a[5];
    QuadCoeffs q;
    q.q0 = 1.0 + a[0] * a[1] * a[2] + a[0] * a[4] * a[5] + a[1] * a[3] * a[5] + a[2] * a[3] * a[4] +
           a[0] * a[1] * a[3] * a[4] + a[0] * a[2] * a[3] * a[5] + a[1] * a[2] * a[4] * a[5];
    cplx pair_sum{0.0, 0.0};
    for (int i = 0; i < 3; ++i)
        pair_sum += (a[i] - 1.0 / a[i]) * (a[i + 3] - 1.0 / a[i + 3]);
    q.q1 = -prod * pair_sum;
    q.q2 = prod * (a[0] * a[3] + a[1] * a[4] + a[2] * a[5] + a[0] * a[1] * a[5] +
                   a[0] * a[2] * a[4] + a[1] * a[2] * a[3] + a[3] * a[4] * a[5] + prod);
    return q;
}

cplx closed_form_z_minus(const ComplexParams& p) {
    if (p.origin == ParamOrigin::FromLengths) {
        const Lengths6 l = lengths_from_params(p);
        const double d = det(gram_from_lengths(l));
        const cplx sqrt_det = d < 0.0 ? cplx(0.0, std::sqrt(-d)) : cplx(-std::sqrt(d), 0.0);
        const cplx s = std::sinh(l.v[0]) * std::sinh(l.v[3]) + std::sinh(l.v[1]) * std::sinh(l.v[4]) +
                       std::sinh(l.v[2]) * std::sinh(l.v[5]);
        double ql = std::exp(l.v[0] + l.v[3]) + std::exp(l.v[1] + l.v[4]) + std::exp(l.v[2] + l.v[5]);
        ql -= std::exp(l.v[0] + l.v[1] + l.v[2]) + std::exp(l.v[0] + l.v[4] + l.v[5]) +
              std::exp(l.v[1] + l.v[3] + l.v[5]) + std::exp(l.v[2] + l.v[3] + l.v[4]);
        ql += std::exp(l.v[0] + l.v[1] + l.v[2] + l.v[3] + l.v[4] + l.v[5]);
        return (2.0 / ql) * (s - sqrt_det);
    }
    const Angles6 a = angles_from_params(p);
    const double d = det(gram_from_angles(a));
    const cplx sqrt_det = d < 0.0 ? cplx(0.0, std::sqrt(-d)) : cplx(-std::sqrt(d), 0.0);
    const cplx s = std::sin(a.v[0]) * std::sin(a.v[3]) + std::sin(a.v[1]) * std::sin(a.v[4]) +
                   std::sin(a.v[2]) * std::sin(a.v[5]);
    const auto& aa = p.a;
    const cplx prod = aa[0] * aa[1] * aa[2] * aa[3] * aa[4] * aa[5];
    const cplx qa = aa[0] * aa[3] + aa[1] * aa[4] + aa[2] * aa[5] + aa[0] * aa[1] * aa[5] +
                    aa[0] * aa[2] * aa[4] + aa[1] * aa[2] * aa[3] + aa[3] * aa[4] * aa[5] + prod;
    return -(2.0 / qa) * (s - sqrt_det);
}

ZPair z_roots(const QuadCoeffs& q, const ComplexParams& p) {
    const auto [r1, r2] = solve_quadratic(q);
    ZPair zp;
    zp.discriminant = q.q1 * q.q1 - 4.0 * q.q0 * q.q2;

    bool take_first;
    const double im_gap = std::abs(r1.imag() - r2.imag());
    if (p.origin == ParamOrigin::FromLengths && im_gap > 1e-14 * (std::abs(r1) + std::abs(r2))) {
        // Real coefficients give a conjugate pair; the closed form puts z-
        // below the axis when q_l > 0 and above when q_l < 0 (q_l has the
        // sign of q2, the exp(sum l) factor being positive).  This matches
        // the closed-form ordering without its det-cancellation noise.
        const double s = q.q2.real() >= 0.0 ? 1.0 : -1.0;
        take_first = s * r1.imag() <= s * r2.imag();
    } else {
        const cplx target = closed_form_z_minus(p);
        take_first = std::abs(r1 - target) <= std::abs(r2 - target);
    }
    zp.z_minus = take_first ? r1 : r2;
    zp.z_plus = take_first ? r2 : r1;
    zp.order_swapped = !take_first;
    zp.z_minus = polish_root(p, zp.z_minus);
    zp.z_plus = polish_root(p, zp.z_plus);
    return zp;
}

std::array<cplx, 8> u_multipliers(const ComplexParams& p) {
    const auto& a = p.a;
    return {cplx(1.0, 0.0),
            a[0] * a[1] * a[3] * a[4],
            a[0] * a[2] * a[3] * a[5],
            a[1] * a[2] * a[4] * a[5],
            -a[0] * a[1] * a[2],
            -a[0] * a[4] * a[5],
            -a[1] * a[3] * a[5],
            -a[2] * a[3] * a[4]};
}

cplx u_eval(const ComplexParams& p, cplx z) {
    const auto f = u_multipliers(p);
    cplx u{0.0, 0.0};
    for (int k = 0; k < 8; ++k) {
        const cplx w = f[k] * z;
        if (w == cplx(1.0, 0.0)) throw evaluation_error("u_eval: dilogarithm argument at the branch point");
        u += (k < 4 ? 1.0 : -1.0) * li2(w);
    }
    return u;
}

cplx zdudz(const ComplexParams& p, cplx z) {
    const auto f = u_multipliers(p);
    cplx r{0.0, 0.0};
    for (int k = 0; k < 8; ++k) {
        const cplx arg = 1.0 - f[k] * z;
        if (arg == 0.0) throw evaluation_error("zdudz: singular log argument");
        r += (k < 4 ? -1.0 : 1.0) * clog(arg);
    }
    return r;
}

std::pair<long, long> branch_residues(const ComplexParams& p, const ZPair& zp) {
    auto one = [&](cplx z) {
        const cplx r = zdudz(p, z);
        const long k = std::lround(r.imag() / kTwoPi);
        if (std::abs(r.real()) > 1e-8)
            throw branch_error("branch_residues: real part of z dU/dz does not vanish at a root");
        if (std::abs(r.imag() - kTwoPi * double(k)) > 1e-6)
            throw branch_error("branch_residues: z dU/dz is not a 2 pi i multiple at a root");
        return k;
    };
    return {one(zp.z_minus), one(zp.z_plus)};
}

cplx v_eval_at(const ComplexParams& p, const ZPair& zp) {
    auto term = [&](cplx z) { return u_eval(p, z) - zdudz(p, z) * clog(z); };
    return kIOver4 * (term(zp.z_minus) - term(zp.z_plus));
}

cplx v_eval(const ComplexParams& p) {
    const QuadCoeffs q = quad_coeffs(p);
    return v_eval_at(p, z_roots(q, p));
}

cplx v_eval_tracked(const ComplexParams& p, const ComplexParams& reference) {
    if (p.origin != reference.origin)
        throw input_error("v_eval_tracked: parameter origins differ");
    try {
        return tracked_adaptive(p, reference);
    } catch (const continuation_error&) {
        // One retry with the endpoint nudged off the offending branch point.
        return tracked_adaptive(perturb_params(p), reference);
    }
}

std::array<double, 6> partials_vl(const Lengths6& l) {
    validate(l);
    const ComplexParams p = params_from_lengths(l);
    const QuadCoeffs q = quad_coeffs(p);
    const ZPair zp = z_roots(q, p);
    auto eval = [](const Lengths6& ll) { return std::real(v_eval(params_from_lengths(ll))); };
    return partials_impl(l, p, zp, eval).value;
}

VolumeResult volume_from_lengths(const Lengths6& l) {
    validate(l);
    const Gram4 g = gram_from_lengths(l);
    const Signature sig = signature(g);
    if (sig.positive != 3 || sig.negative != 1)
        throw realizability_error("volume_from_lengths: Gram matrix signature is not (3,1)");

    const ComplexParams p = params_from_lengths(l);
    const QuadCoeffs q = quad_coeffs(p);
    const ZPair zp = z_roots(q, p);

    // Congruence checks against converted angles are meaningful only when the
    // cofactors stand clear of their rounding floor ~eps * ||G||^3 (they
    // degenerate like rho^4 as the tetrahedron shrinks).
    const Cofactor4 cof = cofactors(g);
    double gmax = 0.0;
    for (const auto& row : g.m)
        for (double x : row) gmax = std::max(gmax, std::abs(x));
    double cdiag_min = std::abs(cof.c[0][0]);
    for (int i = 0; i < 4; ++i) cdiag_min = std::min(cdiag_min, std::abs(cof.c[i][i]));
    const bool angles_sound = cdiag_min > 1e-10 * gmax * gmax * gmax;
    Angles6 conv_angles{};
    if (angles_sound) conv_angles = lengths_to_angles(l);

    auto attempt = [&](bool tracked) {
        LengthsAttempt at;
        at.tracked = tracked;
        ComplexParams ref;
        if (tracked) {
            const double mean = std::accumulate(l.v.begin(), l.v.end(), 0.0) / 6.0;
            Lengths6 reg;
            reg.v.fill(std::clamp(mean, 1e-3, 6.0));
            ref = params_from_lengths(reg);
        }
        std::function<double(const Lengths6&)> eval;
        if (tracked)
            eval = [&ref](const Lengths6& ll) {
                return std::real(v_eval_tracked(params_from_lengths(ll), ref));
            };
        else
            eval = [](const Lengths6& ll) { return std::real(v_eval(params_from_lengths(ll))); };

        at.v = tracked ? v_eval_tracked(p, ref) : v_eval_at(p, zp);
        const PartialsOutcome po = partials_impl(l, p, zp, eval);
        at.partials = po.value;
        at.partial_gap = po.max_reconcile_gap;
        at.volume = at.v.real();
        for (int i = 0; i < 6; ++i) at.volume -= l.v[i] * at.partials[i];
        return at;
    };

    auto acceptable = [&](const LengthsAttempt& at, double& congruence_defect) {
        congruence_defect = 0.0;
        if (std::abs(at.v.imag()) > 1e-9 * std::max(1.0, std::abs(at.v))) return false;
        if (!(at.volume > -1e-12)) return false;
        if (angles_sound) {
            for (int i = 0; i < 6; ++i)
                congruence_defect = std::max(
                    congruence_defect, dist_to_multiple(2.0 * at.partials[i] - conv_angles.v[i], kPi));
            if (congruence_defect > 1e-7) return false;
        }
        return true;
    };

    LengthsAttempt at;
    double congruence = 0.0;
    bool ok = false;
    try {
        at = attempt(false);
        ok = acceptable(at, congruence);
    } catch (const branch_error&) {
        ok = false;
    } catch (const evaluation_error&) {
        ok = false;
    }
    if (!ok) {
        at = attempt(true);
        if (!acceptable(at, congruence))
            throw branch_error("volume_from_lengths: branch diagnostics fail on both evaluation paths");
    }

    VolumeResult res;
    res.volume = std::max(at.volume, 0.0);
    res.shape = Shape::Hyperbolic;
    res.z_pair = zp;
    res.residues = branch_residues(p, zp);
    res.partials = at.partials;
    res.method = VolumeMethod::LengthsThm2;
    res.diagnostics["im_v"] = std::abs(at.v.imag());
    res.diagnostics["quad_residual_minus"] = quad_residual(q, zp.z_minus);
    res.diagnostics["quad_residual_plus"] = quad_residual(q, zp.z_plus);
    res.diagnostics["closed_form_gap"] = std::abs(zp.z_minus - closed_form_z_minus(p));
    res.diagnostics["congruence_defect"] = congruence;
    res.diagnostics["partial_reconcile_gap"] = at.partial_gap;
    res.diagnostics["tracked"] = at.tracked ? 1.0 : 0.0;
    res.diagnostics["root_order_swapped"] = zp.order_swapped ? 1.0 : 0.0;
    return res;
}

VolumeResult volume_from_angles(const Angles6& a) {
    validate(a);
    const Shape shape = classify(a);
    if (shape == Shape::NotRealizable)
        throw shape_error("volume_from_angles: angles do not bound a tetrahedron");

    const ComplexParams p = params_from_angles(a);
    const QuadCoeffs q = quad_coeffs(p);
    const ZPair zp = z_roots(q, p);

    auto volume_of = [&](cplx v, double& off_part) {
        switch (shape) {
            case Shape::Hyperbolic:
                off_part = std::abs(v.imag());
                return -v.real();
            case Shape::Euclidean:
                off_part = std::abs(v);
                return 0.0;
            default:  // Spherical: Vol = Re(-i V) = Im V
                off_part = std::abs(v.real());
                return v.imag();
        }
    };

    cplx v = v_eval_at(p, zp);
    double off = 0.0;
    double vol = volume_of(v, off);
    bool tracked = false;
    const double tol = 1e-8 * std::max(1.0, std::abs(v));
    if (shape != Shape::Euclidean && (off > tol || vol <= -1e-12)) {
        Angles6 reg;
        reg.v.fill(regular_angle_reference(a, shape));
        v = v_eval_tracked(p, params_from_angles(reg));
        vol = volume_of(v, off);
        tracked = true;
        if (off > 1e-8 * std::max(1.0, std::abs(v)) || vol <= -1e-12)
            throw branch_error("volume_from_angles: branch diagnostics fail on both evaluation paths");
    }

    VolumeResult res;
    res.volume = shape == Shape::Euclidean ? 0.0 : std::max(vol, 0.0);
    res.shape = shape;
    res.z_pair = zp;
    res.residues = branch_residues(p, zp);
    res.method = VolumeMethod::AnglesThm1;
    // unit-modulus parameters force q2 = (prod a)^2 conj(q0)
    cplx prod{1.0, 0.0};
    for (const cplx& ai : p.a) prod *= ai;
    res.diagnostics["q2_conj_q0_gap"] =
        std::abs(q.q2 - prod * prod * std::conj(q.q0)) / (1.0 + std::abs(q.q2));
    res.diagnostics["off_real_axis"] = off;
    res.diagnostics["quad_residual_minus"] = quad_residual(q, zp.z_minus);
    res.diagnostics["quad_residual_plus"] = quad_residual(q, zp.z_plus);
    res.diagnostics["closed_form_gap"] = std::abs(zp.z_minus - closed_form_z_minus(p));
    res.diagnostics["tracked"] = tracked ? 1.0 : 0.0;
    res.diagnostics["root_order_swapped"] = zp.order_swapped ? 1.0 : 0.0;
    if (shape == Shape::Euclidean) res.diagnostics["abs_v"] = std::abs(v);
    return res;
}

double schlafli_defect(const Angles6& a, double h) {
    validate(a);
    if (!(h > 0.0)) throw input_error("schlafli_defect: step must be positive");
    if (classify(a) != Shape::Hyperbolic)
        throw shape_error("schlafli_defect: input is not hyperbolic");
    const Lengths6 l = angles_to_lengths(a);
    double defect = 0.0;
    for (int i = 0; i < 6; ++i) {
        Angles6 ap = a, am = a;
        ap.v[i] += h;
        am.v[i] -= h;
        if (classify(ap) != Shape::Hyperbolic || classify(am) != Shape::Hyperbolic)
            throw shape_error("schlafli_defect: perturbation leaves the hyperbolic region");
        const double dv =
            (volume_from_angles(ap).volume - volume_from_angles(am).volume) / (2.0 * h);
        defect = std::max(defect, std::abs(dv + 0.5 * l.v[i]));
    }
    return defect;
}

}  // namespace hytet
