#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace hytet {

using cplx = std::complex<double>;

/// Six dihedral angles A1..A6 in radians, 0 < Ai < pi.
///
/// Labeling: faces are numbered 1-4, face i opposite vertex i.  The angle
/// index i names both the edge and the face pair meeting along it:
///   A1 ~ faces (1,2), A2 ~ (1,3), A3 ~ (2,3), A4 ~ (3,4), A5 ~ (2,4), A6 ~ (1,4).
/// Opposite edges pair up as (1,4), (2,5), (3,6).
struct Angles6 {
    std::array<double, 6> v{};

    double& operator[](std::size_t i) { return v[i]; }
    double operator[](std::size_t i) const { return v[i]; }
};

/// Six edge lengths l1..l6 (hyperbolic length units), li > 0.
///
/// Edge i carries dihedral angle Ai.  In vertex terms:
///   l1 ~ vertices (3,4), l2 ~ (2,4), l3 ~ (1,4), l4 ~ (1,2), l5 ~ (1,3), l6 ~ (2,3).
struct Lengths6 {
    std::array<double, 6> v{};

    double& operator[](std::size_t i) { return v[i]; }
    double operator[](std::size_t i) const { return v[i]; }
};

/// Geometry type decided by the sign of det of the angle Gram matrix.
enum class Shape { Hyperbolic, Euclidean, Spherical, NotRealizable };

const char* to_string(Shape s);

/// Edge index (0-based) -> unordered face pair (0-based), per the labeling above.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeFaces = {{
    {0, 1},  // edge 1: faces (1,2)
    {0, 2},  // edge 2: faces (1,3)
    {1, 2},  // edge 3: faces (2,3)
    {2, 3},  // edge 4: faces (3,4)
    {1, 3},  // edge 5: faces (2,4)
    {0, 3},  // edge 6: faces (1,4)
}};

/// Edge index (0-based) -> unordered vertex pair (0-based).
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices = {{
    {2, 3},  // edge 1: vertices (3,4)
    {1, 3},  // edge 2: vertices (2,4)
    {0, 3},  // edge 3: vertices (1,4)
    {0, 1},  // edge 4: vertices (1,2)
    {0, 2},  // edge 5: vertices (1,3)
    {1, 2},  // edge 6: vertices (2,3)
}};

/// Edge index of an unordered vertex pair; -1 on the diagonal.
int edge_of_vertex_pair(int i, int j);

/// Relabel the tetrahedron by a vertex permutation: perm[old] = new.
/// Edges (and the angles/lengths they carry) move accordingly.
Lengths6 relabel(const Lengths6& l, const std::array<int, 4>& perm);
Angles6 relabel(const Angles6& a, const std::array<int, 4>& perm);

/// Throw input_error unless all values are finite and within the type invariants.
void validate(const Angles6& a);
void validate(const Lengths6& l);

}  // namespace hytet
