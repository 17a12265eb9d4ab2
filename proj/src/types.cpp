#include "hytet/types.hpp"

#include <cmath>

#include "hytet/errors.hpp"

namespace hytet {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

const char* to_string(Shape s) {
    switch (s) {
        case Shape::Hyperbolic: return "hyperbolic";
        case Shape::Euclidean: return "euclidean";
        case Shape::Spherical: return "spherical";
        case Shape::NotRealizable: return "not_realizable";
    }
    return "unknown";
}

int edge_of_vertex_pair(int i, int j) {
    for (int e = 0; e < 6; ++e) {
        const auto& p = kEdgeVertices[e];
        if ((p[0] == i && p[1] == j) || (p[0] == j && p[1] == i)) return e;
    }
    return -1;
}

Lengths6 relabel(const Lengths6& l, const std::array<int, 4>& perm) {
    Lengths6 out;
    for (int e = 0; e < 6; ++e) {
        const int ep = edge_of_vertex_pair(perm[kEdgeVertices[e][0]], perm[kEdgeVertices[e][1]]);
        out.v[ep] = l.v[e];
    }
    return out;
}

Angles6 relabel(const Angles6& a, const std::array<int, 4>& perm) {
    Angles6 out;
    for (int e = 0; e < 6; ++e) {
        const int ep = edge_of_vertex_pair(perm[kEdgeVertices[e][0]], perm[kEdgeVertices[e][1]]);
        out.v[ep] = a.v[e];
    }
    return out;
}

void validate(const Angles6& a) {
    for (double x : a.v) {
        if (!std::isfinite(x)) throw input_error("angles: non-finite value");
        if (!(x > 0.0 && x < kPi)) throw input_error("angles: value outside (0, pi)");
    }
}

void validate(const Lengths6& l) {
    for (double x : l.v) {
        if (!std::isfinite(x)) throw input_error("lengths: non-finite value");
        if (!(x > 0.0)) throw input_error("lengths: value not positive");
    }
}

int exit_code_for(const error& e) {
    if (dynamic_cast<const input_error*>(&e)) return 2;
    if (dynamic_cast<const realizability_error*>(&e)) return 3;
    if (dynamic_cast<const shape_error*>(&e)) return 3;
    return 4;
}

}  // namespace hytet
