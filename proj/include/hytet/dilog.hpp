#pragma once

#include <span>
#include <vector>

#include "hytet/types.hpp"

namespace hytet {

/// Principal complex logarithm with the imaginary part pinned to (-pi, pi].
///
/// The only difference from std::log is on the negative real axis with a
/// signed negative zero imaginary part, where the branch is folded onto +pi.
/// Throws domain_error on zero or non-finite argument.
cplx clog(cplx z);

/// Principal dilogarithm Li2(z) = sum z^k / k^2 continued to the cut plane.
///
/// Branch cut along [1, inf); the value on the cut is the limit from below,
/// Im Li2(x) = -pi log x for x > 1, which is the convention consistent with
/// clog's Im in (-pi, pi] (1 - x then sits on the +pi side of the log cut).
///
/// Evaluation: the power series on |z| <= 0.8, mapped there from everywhere
/// else by the reflection z -> 1-z, inversion z -> 1/z and Landen
/// z -> z/(z-1) identities, with one square-root duplication step
/// Li2(z) = 2 Li2(sqrt z) + 2 Li2(-sqrt z) near the two points exp(+-i pi/3)
/// that the first three maps cannot pull into the disk.
cplx li2(cplx z);

/// Lobachevsky function L(t) = -integral_0^t log|2 sin u| du.
///
/// Odd, pi-periodic.  Computed from the power series of log(sin u / u):
/// L(t) = t - t log|2t| + sum_n zeta(2n) t^(2n+1) / (n (2n+1) pi^(2n))
/// after reduction to |t| <= pi/2; accuracy ~1e-15.
double lobachevsky(double theta);

/// Analytic-continuation state of Li2 along a piecewise-linear path.
///
/// The continued function is represented as li2(z) + c*clog(z) + d where c
/// accumulates 2 pi i per signed crossing of the dilogarithm cut [1, inf)
/// and d absorbs the 2 pi i jumps of the correction term's own log when the
/// path crosses (-inf, 0] while c != 0.
class Li2Tracker {
public:
    /// Account for cut crossings on the straight segment from `a` to `b`.
    void advance(cplx a, cplx b);

    /// Continued value at z (normally the current path endpoint).
    cplx value(cplx z) const;

    bool principal_sheet() const { return c_ == 0.0 && d_ == 0.0; }

private:
    cplx c_{0.0, 0.0};
    cplx d_{0.0, 0.0};
};

/// Winding-counted logarithm along a path: clog(z) + 2 pi i w.
class LogTracker {
public:
    void advance(cplx a, cplx b);
    cplx value(cplx z) const;
    int winding() const { return winding_; }

private:
    int winding_ = 0;
};

/// Continuation of Li2 along the piecewise-linear path through `path`,
/// starting on the principal branch at path.front() and returning the
/// continued value at path.back().
///
/// Requirements: consecutive points no farther than 0.5 apart, no point at
/// the branch point 1, and no segment crossing the real axis too close to 1
/// or through 0 while off the principal sheet.  Violations throw
/// continuation_error.
cplx li2_continued(std::span<const cplx> path);

}  // namespace hytet
