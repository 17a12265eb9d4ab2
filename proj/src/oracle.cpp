// Formula-independent volume oracle: the hyperbolic volume element in the
// Klein ball is dV = dx dy dz / (1 - |x|^2)^2, so the volume of a geodesic
// tetrahedron is an ordinary integral of that density over the Euclidean
// tetrahedron spanned by the projected vertices.  Integration is adaptive
// longest-edge bisection with a fixed 14-point degree-5 simplex rule
// (a 4-point degree-2 rule in midpoint-refined mode).

#include "hytet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "hytet/errors.hpp"

namespace hytet {

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 mid(const Vec3& a, const Vec3& b) {
    return {0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1]), 0.5 * (a[2] + b[2])};
}
double norm2(const Vec3& a) { return a[0] * a[0] + a[1] * a[1] + a[2] * a[2]; }

struct Cell {
    std::array<Vec3, 4> p;
    int depth = 0;
};

double cell_volume(const Cell& c) {
    const Vec3 u = sub(c.p[1], c.p[0]);
    const Vec3 v = sub(c.p[2], c.p[0]);
    const Vec3 w = sub(c.p[3], c.p[0]);
    const double d = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
                     u[2] * (v[0] * w[1] - v[1] * w[0]);
    return std::abs(d) / 6.0;
}

double density(const Vec3& x) {
    const double d = 1.0 - norm2(x);
    if (!(d > 0.0)) throw evaluation_error("integrate_klein: point outside the unit ball");
    return 1.0 / (d * d);
}

struct RulePoint {
    std::array<double, 4> bary;
    double weight;  // fractions of the cell volume, summing to 1
};

// Degree-5, 14-point symmetric rule (S22 + two S31 orbits).
std::vector<RulePoint> degree5_rule() {
    std::vector<RulePoint> pts;
    auto push_s31 = [&](double a, double w) {
        const double b = 1.0 - 3.0 * a;
        pts.push_back({{b, a, a, a}, w});
        pts.push_back({{a, b, a, a}, w});
        pts.push_back({{a, a, b, a}, w});
        pts.push_back({{a, a, a, b}, w});
    };
    const double a1 = 0.045503704125649649492;
    const double w1 = 6.0 * 7.0910034628469110730e-03;
    const double b1 = 0.5 - a1;
    const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (const auto& pr : pairs) {
        std::array<double, 4> bc{b1, b1, b1, b1};
        bc[pr[0]] = a1;
        bc[pr[1]] = a1;
        pts.push_back({bc, w1});
    }
    push_s31(0.092735250310891226402, 6.0 * 0.012248840519393658257);
    push_s31((1.0 - 0.067342242210098170608) / 3.0, 6.0 * 0.018781320953002641800);
    return pts;
}

// Degree-2, 4-point rule used by the midpoint-refined mode.
std::vector<RulePoint> degree2_rule() {
    std::vector<RulePoint> pts;
    const double a = 0.13819660112501051518;  // (5 - sqrt 5)/20
    const double b = 1.0 - 3.0 * a;
    for (int i = 0; i < 4; ++i) {
        std::array<double, 4> bc{a, a, a, a};
        bc[i] = b;
        pts.push_back({bc, 0.25});
    }
    return pts;
}

double apply_rule(const Cell& c, const std::vector<RulePoint>& rule) {
    const double vol = cell_volume(c);
    double s = 0.0;
    for (const RulePoint& rp : rule) {
        Vec3 x{0.0, 0.0, 0.0};
        for (int v = 0; v < 4; ++v)
            for (int k = 0; k < 3; ++k) x[k] += rp.bary[v] * c.p[v][k];
        s += rp.weight * density(x);
    }
    return s * vol;
}

std::pair<Cell, Cell> bisect(const Cell& c) {
    const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    int best = 0;
    double best_len = -1.0;
    for (int e = 0; e < 6; ++e) {
        const double len = norm2(sub(c.p[pairs[e][0]], c.p[pairs[e][1]]));
        if (len > best_len) {
            best_len = len;
            best = e;
        }
    }
    const int i = pairs[best][0], j = pairs[best][1];
    const Vec3 m = mid(c.p[i], c.p[j]);
    Cell a = c, b = c;
    a.p[j] = m;
    b.p[i] = m;
    a.depth = b.depth = c.depth + 1;
    return {a, b};
}

}  // namespace

QuadratureStats integrate_klein_stats(const KleinTetrahedron& t, const QuadratureSpec& spec) {
    if (!(spec.rel_tol >= 1e-12)) throw input_error("integrate_klein: rel_tol below 1e-12");
    for (const auto& p : t.p) {
        const double r = std::sqrt(norm2({p[0], p[1], p[2]}));
        if (!(r < 1.0 - 1e-8))
            throw realizability_error("integrate_klein: vertex within 1e-8 of the unit sphere");
    }

    const std::vector<RulePoint> rule =
        spec.rule == QuadratureRule::Degree5 ? degree5_rule() : degree2_rule();

    Cell root;
    for (int i = 0; i < 4; ++i) root.p[i] = t.p[i];
    const double v_root = cell_volume(root);
    if (!(v_root > 0.0))
        throw realizability_error("integrate_klein: degenerate (flat) tetrahedron");

    // Scale estimate from a short uniform refinement.
    double t_est = 0.0;
    {
        std::vector<Cell> cur{root};
        for (int lvl = 0; lvl < 4; ++lvl) {
            std::vector<Cell> next;
            next.reserve(cur.size() * 2);
            for (const Cell& c : cur) {
                auto [a, b] = bisect(c);
                next.push_back(a);
                next.push_back(b);
            }
            cur.swap(next);
        }
        for (const Cell& c : cur) t_est += apply_rule(c, rule);
    }

    QuadratureStats stats;
    long budget = spec.max_subdivisions;
    std::vector<Cell> stack{root};
    constexpr int kMinDepth = 2;
    constexpr int kMaxDepth = 64;
    while (!stack.empty()) {
        const Cell c = stack.back();
        stack.pop_back();
        if (--budget < 0)
            throw convergence_error("integrate_klein: subdivision budget exhausted");
        ++stats.cells;
        stats.max_depth = std::max(stats.max_depth, c.depth);

        const double q1 = apply_rule(c, rule);
        auto [ca, cb] = bisect(c);
        const double q2 = apply_rule(ca, rule) + apply_rule(cb, rule);
        const double share = cell_volume(c) / v_root;
        // |q2 - q1| tracks the error of q1; the committed value q2 is better
        // by the local convergence order, and the 0.05 safety factor keeps
        // the summed true error inside rel_tol even where bisection degrades.
        if ((c.depth >= kMinDepth &&
             std::abs(q2 - q1) <= 0.05 * spec.rel_tol * std::abs(t_est) * share) ||
            c.depth >= kMaxDepth) {
            stats.value += q2;
        } else {
            stack.push_back(cb);
            stack.push_back(ca);
        }
    }
    return stats;
}

double integrate_klein(const KleinTetrahedron& t, const QuadratureSpec& spec) {
    return integrate_klein_stats(t, spec).value;
}

double oracle_volume_from_lengths(const Lengths6& l, const QuadratureSpec& spec) {
    return integrate_klein(to_klein(embed_vertices(l)), spec);
}

RegularFixtures regular_fixtures(double rho) {
    if (!(rho > 0.0)) throw input_error("regular_fixtures: rho must be positive");
    const double c = std::cosh(rho), s = std::sinh(rho);
    const double er = std::exp(rho);
    RegularFixtures fx;
    const double denom = 2.0 * std::exp(4.0 * rho) * (2.0 * c - s + 1.0);
    const double re = 3.0 * (c + 1.0) / denom;
    const double im = std::sqrt((c - 1.0) * (3.0 * c + 1.0)) / denom;
    fx.z_minus = {re, -im};
    fx.z_plus = {re, im};
    const double root = std::sqrt(3.0 * er * er + 2.0 * er + 3.0);
    fx.atan_arg_z = std::atan(-root / (2.0 * std::pow(er, 5) + 6.0 * std::pow(er, 4) +
                                       12.0 * std::pow(er, 3) + 12.0 * er * er + 9.0 * er + 3.0));
    fx.atan_arg_e4 = std::atan(root / (er + 3.0));
    fx.atan_arg_e3 = std::atan(-root / (2.0 * er * er + 3.0 * er + 3.0));
    fx.euclidean_ratio = std::sqrt((c + 1.0) * (3.0 * c + 1.0)) / c;
    fx.dvl_drho_atan = std::atan(fx.euclidean_ratio);
    return fx;
}

std::vector<GoldenRecord> read_golden(std::istream& in) {
    std::vector<GoldenRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        GoldenRecord r;
        if (!(ss >> r.key >> r.volume >> r.rel_tol >> r.cells))
            throw input_error("golden file: malformed record: " + line);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<GoldenRecord> read_golden_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("golden file: cannot open " + path);
    return read_golden(in);
}

void write_golden(std::ostream& out, const std::vector<GoldenRecord>& records) {
    out << "# columns: key volume rel_tol cells\n";
    out << "# key: rho=<r> (regular tetrahedron, all edges r) or l=<l1,l2,l3,l4,l5,l6>\n";
    char buf[256];
    for (const GoldenRecord& r : records) {
        std::snprintf(buf, sizeof buf, "%s %.15g %.3g %ld\n", r.key.c_str(), r.volume, r.rel_tol,
                      r.cells);
        out << buf;
    }
}

Lengths6 lengths_from_golden_key(const std::string& key) {
    Lengths6 l;
    if (key.rfind("rho=", 0) == 0) {
        const double rho = std::stod(key.substr(4));
        l.v.fill(rho);
        return l;
    }
    if (key.rfind("l=", 0) == 0) {
        std::istringstream ss(key.substr(2));
        std::string tok;
        int i = 0;
        while (std::getline(ss, tok, ',') && i < 6) l.v[i++] = std::stod(tok);
        if (i == 6) return l;
    }
    throw input_error("golden file: unrecognized key: " + key);
}

}  // namespace hytet
