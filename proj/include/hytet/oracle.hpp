#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hytet/gram.hpp"
#include "hytet/types.hpp"

namespace hytet {

enum class QuadratureRule { MidpointRefined, Degree5 };

struct QuadratureSpec {
    double rel_tol = 1e-8;          // >= 1e-12
    long max_subdivisions = 4'000'000;
    QuadratureRule rule = QuadratureRule::Degree5;
};

struct QuadratureStats {
    double value = 0.0;
    long cells = 0;
    int max_depth = 0;
};

/// Hyperbolic volume of a Klein-model tetrahedron: the integral of
/// (1 - |x|^2)^-2 over the Euclidean tetrahedron, by recursive longest-edge
/// bisection with a fixed-degree simplex rule.  Deterministic for a fixed
/// spec.  Vertices must stay at Euclidean distance > 1e-8 from the unit
/// sphere (realizability_error otherwise); exhausting the subdivision budget
/// throws convergence_error.
double integrate_klein(const KleinTetrahedron& t, const QuadratureSpec& spec = {});
QuadratureStats integrate_klein_stats(const KleinTetrahedron& t, const QuadratureSpec& spec = {});

/// Formula-free volume: embed_vertices -> to_klein -> integrate_klein.
double oracle_volume_from_lengths(const Lengths6& l, const QuadratureSpec& spec = {});

/// Specialized closed forms for the regular tetrahedron (all edges rho),
/// used purely as fixtures against the generic engine:
///  - the critical points z-+(rho),
///  - the arctangent representatives (folded to (-pi/2, pi/2]) of
///    arg(1 - z+), arg(1 - e^{4 rho} z+), arg(1 - e^{3 rho} z+),
///  - the arctangent part of dV_l/d rho per edge,
///  - the ratio sqrt((cosh rho + 1)(3 cosh rho + 1))/cosh rho whose rho -> 0
///    limit 2 sqrt(2) is the tangent of the Euclidean regular dihedral angle.
struct RegularFixtures {
    cplx z_minus{}, z_plus{};
    double atan_arg_z = 0.0;    // arg(1 - z_plus) folded
    double atan_arg_e4 = 0.0;   // arg(1 - e^{4 rho} z_plus) folded
    double atan_arg_e3 = 0.0;   // arg(1 - e^{3 rho} z_plus) folded
    double dvl_drho_atan = 0.0; // arctan(sqrt((c+1)(3c+1))/c), c = cosh rho
    double euclidean_ratio = 0.0;  // sqrt((c+1)(3c+1))/c
};
RegularFixtures regular_fixtures(double rho);

/// Golden-value records: one per line, whitespace-separated columns
///   key volume rel_tol cells
/// where key is `rho=<r>` for the regular tetrahedron with edge r or
/// `l=<l1,l2,l3,l4,l5,l6>`.  Lines starting with '#' are comments.
struct GoldenRecord {
    std::string key;
    double volume = 0.0;
    double rel_tol = 0.0;
    long cells = 0;
};

std::vector<GoldenRecord> read_golden(std::istream& in);
std::vector<GoldenRecord> read_golden_file(const std::string& path);
void write_golden(std::ostream& out, const std::vector<GoldenRecord>& records);

/// Lengths named by a golden key (`rho=` or `l=`); throws input_error.
Lengths6 lengths_from_golden_key(const std::string& key);

}  // namespace hytet
