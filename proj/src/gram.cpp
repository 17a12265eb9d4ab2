// Gram matrices of a tetrahedron in both flavors, cofactor machinery, the
// angle <-> length conversions, and the Minkowski/Klein embedding.
//
// Conversion formulas: with c the cofactor matrix of the Gram matrix,
//   cosh l(i,j) = c_ij / sqrt(c_ii c_jj)   (angle flavor, vertex pair i,j)
//   cos  A(i,j) = c_ij / sqrt(c_ii c_jj)   (length flavor, face pair i,j)
// For a compact hyperbolic tetrahedron the diagonal cofactors are positive
// in the angle flavor and negative in the length flavor; both products under
// the square root are positive and the signs are checked as realizability
// preconditions.

#include "hytet/gram.hpp"

#include <algorithm>
#include <cmath>

#include "hytet/errors.hpp"

namespace hytet {

namespace {

double frobenius(const Gram4& g) {
    double s = 0.0;
    for (const auto& row : g.m)
        for (double x : row) s += x * x;
    return std::sqrt(s);
}

double minor3(const std::array<std::array<double, 4>, 4>& m, int row, int col) {
    std::array<int, 3> r{}, c{};
    for (int i = 0, k = 0; i < 4; ++i)
        if (i != row) r[k++] = i;
    for (int j = 0, k = 0; j < 4; ++j)
        if (j != col) c[k++] = j;
    return m[r[0]][c[0]] * (m[r[1]][c[1]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[1]]) -
           m[r[0]][c[1]] * (m[r[1]][c[0]] * m[r[2]][c[2]] - m[r[1]][c[2]] * m[r[2]][c[0]]) +
           m[r[0]][c[2]] * (m[r[1]][c[0]] * m[r[2]][c[1]] - m[r[1]][c[1]] * m[r[2]][c[0]]);
}

}  // namespace

Gram4 gram_from_angles(const Angles6& a) {
    validate(a);
    Gram4 g;
    g.flavor = GramFlavor::Angle;
    for (int i = 0; i < 4; ++i) g.m[i][i] = 1.0;
    for (int e = 0; e < 6; ++e) {
        const int i = kEdgeFaces[e][0], j = kEdgeFaces[e][1];
        g.m[i][j] = g.m[j][i] = -std::cos(a.v[e]);
    }
    return g;
}

Gram4 gram_from_lengths(const Lengths6& l) {
    validate(l);
    Gram4 g;
    g.flavor = GramFlavor::Length;
    for (int i = 0; i < 4; ++i) g.m[i][i] = -1.0;
    for (int e = 0; e < 6; ++e) {
        const int i = kEdgeVertices[e][0], j = kEdgeVertices[e][1];
        g.m[i][j] = g.m[j][i] = -std::cosh(l.v[e]);
    }
    return g;
}

Cofactor4 cofactors(const Gram4& g) {
    Cofactor4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out.c[i][j] = (((i + j) & 1) ? -1.0 : 1.0) * minor3(g.m, i, j);
    return out;
}

double det(const Gram4& g, const Cofactor4& c) {
    double s = 0.0;
    for (int j = 0; j < 4; ++j) s += g.m[0][j] * c.c[0][j];
    return s;
}

double det(const Gram4& g) { return det(g, cofactors(g)); }

Shape classify(const Angles6& a) {
    const Gram4 g = gram_from_angles(a);
    const Cofactor4 c = cofactors(g);
    const double d = det(g, c);
    const double nrm = frobenius(g);
    const double eps = 1e-10 * nrm * nrm * nrm * nrm;
    if (d < -eps) return Shape::Hyperbolic;
    if (d <= eps) return Shape::Euclidean;
    // det > 0: spherical iff G_A is positive definite, which for the unit
    // diagonal reduces to positive diagonal cofactors.
    for (int i = 0; i < 4; ++i)
        if (!(c.c[i][i] > 0.0)) return Shape::NotRealizable;
    return Shape::Spherical;
}

Lengths6 angles_to_lengths(const Angles6& a) {
    const Shape s = classify(a);
    if (s != Shape::Hyperbolic)
        throw shape_error("angles_to_lengths: input is not a hyperbolic tetrahedron");
    const Gram4 g = gram_from_angles(a);
    const Cofactor4 c = cofactors(g);
    for (int i = 0; i < 4; ++i)
        if (!(c.c[i][i] > 0.0))
            throw realizability_error("angles_to_lengths: diagonal cofactor sign violates realizability");
    Lengths6 out;
    for (int e = 0; e < 6; ++e) {
        const int i = kEdgeVertices[e][0], j = kEdgeVertices[e][1];
        const double ratio = c.c[i][j] / std::sqrt(c.c[i][i] * c.c[j][j]);
        if (!(ratio > 1.0))
            throw realizability_error("angles_to_lengths: cofactor ratio below the cosh range");
        out.v[e] = std::acosh(ratio);
    }
    return out;
}

Angles6 lengths_to_angles(const Lengths6& l) {
    const Gram4 g = gram_from_lengths(l);
    const Signature sig = signature(g);
    if (sig.positive != 3 || sig.negative != 1)
        throw realizability_error("lengths_to_angles: Gram matrix signature is not (3,1)");
    const Cofactor4 c = cofactors(g);
    for (int i = 0; i < 4; ++i)
        if (!(c.c[i][i] < 0.0))
            throw realizability_error("lengths_to_angles: diagonal cofactor sign violates realizability");
    Angles6 out;
    for (int e = 0; e < 6; ++e) {
        const int i = kEdgeFaces[e][0], j = kEdgeFaces[e][1];
        const double ratio = c.c[i][j] / std::sqrt(c.c[i][i] * c.c[j][j]);
        if (!(std::abs(ratio) < 1.0))
            throw realizability_error("lengths_to_angles: cofactor ratio outside the cosine range");
        out.v[e] = std::acos(ratio);
    }
    return out;
}

Eigen4 eigen_sym4(const std::array<std::array<double, 4>, 4>& m) {
    std::array<std::array<double, 4>, 4> a = m;
    std::array<std::array<double, 4>, 4> q{};
    for (int i = 0; i < 4; ++i) q[i][i] = 1.0;

    auto off_norm = [&a]() {
        double s = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) s += a[i][j] * a[i][j];
        return s;
    };
    double scale = 0.0;
    for (const auto& row : m)
        for (double x : row) scale = std::max(scale, std::abs(x));
    const double tol = std::max(1e-300, 1e-30 * scale * scale);

    for (int sweep = 0; sweep < 64 && off_norm() > tol; ++sweep) {
        for (int p = 0; p < 4; ++p) {
            for (int qi = p + 1; qi < 4; ++qi) {
                if (std::abs(a[p][qi]) <= 1e-300) continue;
                const double theta = (a[qi][qi] - a[p][p]) / (2.0 * a[p][qi]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cth = 1.0 / std::sqrt(t * t + 1.0);
                const double sth = t * cth;
                const double tau = sth / (1.0 + cth);
                const double apq = a[p][qi];
                a[p][qi] = a[qi][p] = 0.0;
                a[p][p] -= t * apq;
                a[qi][qi] += t * apq;
                for (int r = 0; r < 4; ++r) {
                    const double qrp = q[r][p], qrq = q[r][qi];
                    q[r][p] = qrp - sth * (qrq + tau * qrp);
                    q[r][qi] = qrq + sth * (qrp - tau * qrq);
                    if (r == p || r == qi) continue;
                    const double arp = a[r][p], arq = a[r][qi];
                    a[r][p] = a[p][r] = arp - sth * (arq + tau * arp);
                    a[r][qi] = a[qi][r] = arq + sth * (arp - tau * arq);
                }
            }
        }
    }

    Eigen4 out;
    std::array<int, 4> order{0, 1, 2, 3};
    std::array<double, 4> vals{a[0][0], a[1][1], a[2][2], a[3][3]};
    std::sort(order.begin(), order.end(), [&](int x, int y) { return vals[x] < vals[y]; });
    for (int k = 0; k < 4; ++k) {
        out.values[k] = vals[order[k]];
        for (int i = 0; i < 4; ++i) out.vectors[i][k] = q[i][order[k]];
    }
    return out;
}

Signature signature(const Gram4& g) {
    const Eigen4 e = eigen_sym4(g.m);
    double maxabs = 0.0;
    for (double v : e.values) maxabs = std::max(maxabs, std::abs(v));
    const double thr = 1e-10 * maxabs;
    Signature s;
    for (double v : e.values) {
        if (v > thr)
            ++s.positive;
        else if (v < -thr)
            ++s.negative;
        else
            ++s.zero;
    }
    return s;
}

MinkowskiVertices embed_vertices(const Lengths6& l) {
    const Gram4 g = gram_from_lengths(l);
    const Eigen4 e = eigen_sym4(g.m);
    double maxabs = 0.0;
    for (double v : e.values) maxabs = std::max(maxabs, std::abs(v));
    const double thr = 1e-10 * maxabs;
    int positives = 0, negatives = 0;
    for (double v : e.values) {
        if (v > thr) ++positives;
        if (v < -thr) ++negatives;
    }
    if (positives != 3 || negatives != 1)
        throw realizability_error("embed_vertices: Gram matrix signature is not (3,1)");

    // Eigenvalues are ascending, so the single negative one sits first; it
    // becomes the time-like coordinate (stored last).
    MinkowskiVertices mv;
    for (int i = 0; i < 4; ++i) {
        for (int k = 1; k < 4; ++k)
            mv.v[i][k - 1] = e.vectors[i][k] * std::sqrt(e.values[k]);
        mv.v[i][3] = e.vectors[i][0] * std::sqrt(-e.values[0]);
    }
    // Upper sheet: the time column is the Perron eigenvector of -G_l
    // (entrywise positive matrix), hence one-signed; flip if needed.
    int sign = 0;
    for (int i = 0; i < 4; ++i) {
        const int s = mv.v[i][3] > 0.0 ? 1 : -1;
        if (sign == 0) sign = s;
        if (s != sign)
            throw realizability_error("embed_vertices: vertices do not lie on one hyperboloid sheet");
    }
    if (sign < 0)
        for (int i = 0; i < 4; ++i) mv.v[i][3] = -mv.v[i][3];
    return mv;
}

KleinTetrahedron to_klein(const MinkowskiVertices& mv) {
    KleinTetrahedron kt;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 3; ++k) kt.p[i][k] = mv.v[i][k] / mv.v[i][3];
    return kt;
}

}  // namespace hytet
