#pragma once

#include <array>

#include "hytet/types.hpp"

namespace hytet {

enum class GramFlavor { Angle, Length };

/// 4x4 real symmetric Gram matrix.
///
/// Angle flavor: unit diagonal, entry (i,j) = -cos of the dihedral angle
/// between faces i and j.  Length flavor: -1 diagonal, entry (i,j) = -cosh of
/// the edge length between vertices i and j.
struct Gram4 {
    std::array<std::array<double, 4>, 4> m{};
    GramFlavor flavor{GramFlavor::Angle};
};

/// Cofactor matrix c_ij = (-1)^(i+j) det of the minor deleting row i, col j;
/// satisfies G * c = det(G) * I (c is symmetric for symmetric G).
struct Cofactor4 {
    std::array<std::array<double, 4>, 4> c{};
};

/// Four vertex vectors in Minkowski space of signature (3,1): rows are
/// (x, y, z, t) with inner product x1x2 + y1y2 + z1z2 - t1t2, each on the
/// upper unit hyperboloid <v,v> = -1, t > 0.
struct MinkowskiVertices {
    std::array<std::array<double, 4>, 4> v{};
};

/// Projective (Klein) image of the vertices: points in the open unit ball,
/// p = (x,y,z)/t.
struct KleinTetrahedron {
    std::array<std::array<double, 3>, 4> p{};
};

Gram4 gram_from_angles(const Angles6& a);
Gram4 gram_from_lengths(const Lengths6& l);

/// Cofactors by explicit 3x3 minors; valid for singular matrices too.
Cofactor4 cofactors(const Gram4& g);

/// Determinant by cofactor expansion along the first row.
double det(const Gram4& g);
double det(const Gram4& g, const Cofactor4& c);

/// Geometry classification by the sign of det G_A against the scale-aware
/// threshold eps = 1e-10 * ||G||_F^4.  Spherical additionally requires all
/// diagonal cofactors positive (positive definiteness); otherwise the angles
/// bound no tetrahedron and the result is NotRealizable.
Shape classify(const Angles6& a);

/// Edge lengths from dihedral angles via cosh l = c_jk / sqrt(c_jj c_kk) on
/// the angle cofactors, (j,k) the vertex pair of the edge.  Requires a
/// hyperbolic classification; throws shape_error or realizability_error.
Lengths6 angles_to_lengths(const Angles6& a);

/// Dihedral angles from edge lengths via cos A = c_jk / sqrt(c_jj c_kk) on
/// the length cofactors, (j,k) the face pair of the edge.  Requires G_l of
/// signature (3,1); throws realizability_error.
Angles6 lengths_to_angles(const Lengths6& l);

/// Eigenvalues (ascending) and matching orthonormal columns of a symmetric
/// 4x4 matrix, by cyclic Jacobi rotations.
struct Eigen4 {
    std::array<double, 4> values{};
    std::array<std::array<double, 4>, 4> vectors{};  // vectors[i][k]: row i of eigenvector k
};
Eigen4 eigen_sym4(const std::array<std::array<double, 4>, 4>& m);

/// (positive count, negative count) of eigenvalues, zeros being those within
/// 1e-10 * max |eigenvalue|.
struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};
Signature signature(const Gram4& g);

/// Vertex vectors realizing G_l, built from its eigendecomposition with the
/// rescaling sqrt|lambda| and the (+,+,+,-) sign pattern; time components
/// made positive (upper sheet).  Throws realizability_error unless the
/// signature is (3,1).
MinkowskiVertices embed_vertices(const Lengths6& l);

/// Central projection onto the Klein ball, p = (x,y,z)/t.
KleinTetrahedron to_klein(const MinkowskiVertices& mv);

}  // namespace hytet
