#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hytet/gram.hpp"
#include "hytet/types.hpp"

namespace hytet {

enum class ParamOrigin { FromAngles, FromLengths };

/// The six complex parameters a1..a6 feeding the U/V machinery.
/// FromAngles: ak = exp(i Ak), unit modulus.  FromLengths: ak real < -1 under
/// the fixed index rotation a1 = -exp(l4), a2 = -exp(l5), a3 = -exp(l6),
/// a4 = -exp(l1), a5 = -exp(l2), a6 = -exp(l3).
struct ComplexParams {
    std::array<cplx, 6> a{};
    ParamOrigin origin{ParamOrigin::FromAngles};
};

/// Coefficients of the critical-point quadratic q2 z^2 + q1 z + q0 = 0.
struct QuadCoeffs {
    cplx q0{}, q1{}, q2{};
};

/// The two non-trivial critical points of U in z, ordered so that z_minus
/// matches the closed form with the pinned square-root convention (see
/// z_roots).  For real (length) parameters z_plus = conj(z_minus).
struct ZPair {
    cplx z_minus{}, z_plus{};
    cplx discriminant{};
    bool order_swapped = false;  // quadratic-formula order vs closed-form order
};

enum class VolumeMethod { AnglesThm1, LengthsThm2 };

struct VolumeResult {
    double volume = 0.0;
    Shape shape = Shape::NotRealizable;
    ZPair z_pair{};
    std::pair<long, long> residues{0, 0};  // (k_minus, k_plus)
    std::optional<std::array<double, 6>> partials;  // dV_l/dl_i, length method only
    VolumeMethod method = VolumeMethod::LengthsThm2;
    std::map<std::string, double> diagnostics;
};

ComplexParams params_from_angles(const Angles6& a);
ComplexParams params_from_lengths(const Lengths6& l);

/// Literal evaluation of the three quadratic coefficients in the a_i.
QuadCoeffs quad_coeffs(const ComplexParams& p);

/// Quadratic-formula roots with the discriminant branch pinned by matching
/// z_minus against the closed form
///   lengths: (2/q_l)(sinh l1 sinh l4 + sinh l2 sinh l5 + sinh l3 sinh l6 - sqrt(det G_l))
///   angles: -(2/q_A)(sin A1 sin A4 + sin A2 sin A5 + sin A3 sin A6 - sqrt(det G_A))
/// where sqrt(det G) = +i sqrt(-det G) when det G < 0 and -sqrt(det G) when
/// det G > 0 (the spherical regime; fixed by the orthogonal tetrahedron test).
ZPair z_roots(const QuadCoeffs& q, const ComplexParams& p);

/// The closed-form z_minus above, used for root ordering and as an
/// independent identity check.
cplx closed_form_z_minus(const ComplexParams& p);

/// The eight multipliers f_k with U = sum_{k<4} Li2(f_k z) - sum_{k>=4} Li2(f_k z).
std::array<cplx, 8> u_multipliers(const ComplexParams& p);

/// U(a1..a6, z): four positive and four negative dilogarithms, principal branches.
cplx u_eval(const ComplexParams& p, cplx z);

/// z dU/dz: the eight-term principal-branch log sum.
cplx zdudz(const ComplexParams& p, cplx z);

/// Integer residues k with z dU/dz = 2 pi i k at the two roots.  Throws
/// branch_error if the values stray from 2 pi i Z beyond tolerance
/// (|Re| < 1e-8 absolute, |Im - 2 pi k| < 1e-6).
std::pair<long, long> branch_residues(const ComplexParams& p, const ZPair& zp);

/// V = (i/4) [ (U(z-) - z dU/dz|_{z-} log z-) - (U(z+) - z dU/dz|_{z+} log z+) ],
/// all principal branches.
cplx v_eval(const ComplexParams& p);
cplx v_eval_at(const ComplexParams& p, const ZPair& zp);

/// V evaluated by analytic continuation of every dilogarithm/log argument
/// along the straight parameter path from `reference` to `p`, starting on the
/// principal branch at the reference.  Equals v_eval whenever no cut is
/// crossed; refinement-stable to 1e-10 (doubling the discretization until
/// stable, throwing continuation_error if it never settles).
cplx v_eval_tracked(const ComplexParams& p, const ComplexParams& reference);

/// dV_l/dl_i, i = 1..6: the analytic (i/4)(log phi/psi) expression corrected
/// by the integer multiple of pi/2 that reconciles it with a Richardson
/// central difference of v_eval (h = 1e-5).  Throws branch_error when no
/// integer matches within 1e-4 or the reconciled values differ by > 1e-7.
std::array<double, 6> partials_vl(const Lengths6& l);

/// Volume from the six dihedral angles (hyperbolic: -V_A; Euclidean: 0;
/// spherical: Re(-i V_A)).  Falls back to tracked evaluation from a regular
/// reference if principal-branch diagnostics fail.
VolumeResult volume_from_angles(const Angles6& a);

/// Volume from the six edge lengths: Re V_l - sum l_i dV_l/dl_i, with the
/// same principal-first / tracked-fallback policy.
VolumeResult volume_from_lengths(const Lengths6& l);

/// max_i | d Vol/d A_i (central difference, step h) + l_i / 2 |, the residual
/// of the Schlafli differential identity at a hyperbolic angle tuple.
double schlafli_defect(const Angles6& a, double h);

}  // namespace hytet
