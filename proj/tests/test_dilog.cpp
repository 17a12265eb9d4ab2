#include <doctest.h>

#include <cmath>
#include <vector>

#include "hytet/dilog.hpp"
#include "hytet/errors.hpp"
#include "test_helpers.hpp"

using namespace hytet;
using testutil::Rng;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

// Reference zeta(2) from partial sums with an Euler-Maclaurin tail.
double zeta2_reference() {
    const int n = 10000;
    double s = 0.0;
    for (int k = n; k >= 1; --k) s += 1.0 / (double(k) * k);
    const double N = n;
    return s + 1.0 / N - 1.0 / (2.0 * N * N) + 1.0 / (6.0 * N * N * N);
}

// Reference eta(2) = sum (-1)^(k+1)/k^2 by averaged partial sums.
double eta2_reference() {
    const int n = 200000;
    double s = 0.0;
    for (int k = n; k >= 1; --k) s += (k % 2 ? 1.0 : -1.0) / (double(k) * k);
    const double tail = (n % 2 ? -1.0 : 1.0) / (double(n + 1) * (n + 1));
    return s + 0.5 * tail;
}
}  // namespace

TEST_CASE("clog: values and branch convention") {
    CHECK(std::abs(clog({1.0, 0.0})) == 0.0);
    CHECK(std::abs(clog({-1.0, 0.0}) - cplx(0.0, kPi)) < 1e-15);
    CHECK(std::abs(clog({0.0, std::exp(1.0)}) - cplx(1.0, kPi / 2)) < 1e-15);
    // the -pi ray folds onto +pi
    CHECK(clog(cplx(-2.0, -0.0)).imag() == doctest::Approx(kPi));
    CHECK_THROWS_AS(clog({0.0, 0.0}), domain_error);
}

TEST_CASE("clog: exp inverse on a wide annulus") {
    Rng rng(101);
    for (int i = 0; i < 10000; ++i) {
        const cplx z = testutil::random_annulus(rng, 1e-6, 1e6);
        const cplx w = clog(z);
        CHECK(w.imag() > -kPi);
        CHECK(w.imag() <= kPi);
        CHECK(std::abs(std::exp(w) - z) <= 1e-14 * std::abs(z));
    }
}

TEST_CASE("li2: pinned values against series oracles") {
    CHECK(li2({0.0, 0.0}) == cplx(0.0, 0.0));
    CHECK(li2({1.0, 0.0}).real() == doctest::Approx(zeta2_reference()).epsilon(1e-14));
    CHECK(li2({1.0, 0.0}).imag() == 0.0);
    CHECK(li2({-1.0, 0.0}).real() == doctest::Approx(-eta2_reference()).epsilon(1e-13));

    // direct series at 1/2 (200 terms) and the closed form
    double s = 0.0, p = 1.0;
    for (int k = 1; k <= 200; ++k) {
        p *= 0.5;
        s += p / (double(k) * k);
    }
    CHECK(li2({0.5, 0.0}).real() == doctest::Approx(s).epsilon(1e-15));
    const double ln2 = std::log(2.0);
    CHECK(li2({0.5, 0.0}).real() ==
          doctest::Approx(kPi * kPi / 12.0 - 0.5 * ln2 * ln2).epsilon(1e-15));
}

TEST_CASE("li2: value at i ties to Catalan's constant") {
    // Li2(i) = -pi^2/48 + i G with G = 2 L(pi/4) from the quadrature oracle.
    const double catalan = 2.0 * testutil::lobachevsky_quadrature(kPi / 4.0);
    const cplx v = li2({0.0, 1.0});
    CHECK(v.real() == doctest::Approx(-kPi * kPi / 48.0).epsilon(1e-14));
    CHECK(v.imag() == doctest::Approx(catalan).epsilon(1e-12));
}

TEST_CASE("li2: unit circle values from the Fourier split") {
    // On |z| = 1 (angle not 0): Re Li2 = pi^2/6 - t(2 pi - t)/4, Im = Cl2(t).
    Rng rng(999);
    for (int i = 0; i < 50; ++i) {
        const double t = rng.uniform(0.05, 2.0 * kPi - 0.05);
        const cplx v = li2({std::cos(t), std::sin(t)});
        const double re_expect = kPi * kPi / 6.0 - t * (2.0 * kPi - t) / 4.0;
        const double im_expect = 2.0 * testutil::lobachevsky_quadrature(0.5 * t);
        CHECK(v.real() == doctest::Approx(re_expect).epsilon(1e-12));
        CHECK(v.imag() == doctest::Approx(im_expect).epsilon(1e-11));
    }
}

TEST_CASE("li2: accuracy sweep against the defining integral") {
    // Independent reference: integrate -log(1 - t)/t along the straight
    // segment from 0 to z (valid while the segment stays off [1, inf)).
    auto reference = [](cplx z, double tol) {
        auto g_re = [z](double s) {
            const cplx v = s == 0.0 ? z : -clog(1.0 - s * z) / s;
            return v.real();
        };
        auto g_im = [z](double s) {
            const cplx v = s == 0.0 ? z : -clog(1.0 - s * z) / s;
            return v.imag();
        };
        return cplx(testutil::integrate(g_re, 0.0, 1.0, tol),
                    testutil::integrate(g_im, 0.0, 1.0, tol));
    };

    Rng rng(606);
    for (int n = 0; n < 50;) {  // |z| <= 0.9: smooth integrand, 1e-13 relative
        const cplx z = testutil::random_annulus(rng, 0.05, 0.9);
        if (std::abs(z.imag()) < 0.05 * std::abs(z)) continue;  // keep the segment off the cut
        ++n;
        const cplx ref = reference(z, 1e-14);
        CHECK(std::abs(li2(z) - ref) <= 1e-13 * std::max(1.0, std::abs(ref)));
    }
    for (int n = 0; n < 50;) {  // outer region: 1e-12 relative
        const cplx z = testutil::random_annulus(rng, 0.9, 5.0);
        if (std::abs(z.imag()) < 0.05 * std::abs(z)) continue;
        ++n;
        const cplx ref = reference(z, 1e-13);
        CHECK(std::abs(li2(z) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("li2: inversion identity off the cut") {
    Rng rng(202);
    int done = 0;
    while (done < 1000) {
        const cplx z = testutil::random_annulus(rng, 0.05, 20.0);
        if (std::abs(z.imag()) < 1e-6 && z.real() > 0.0) continue;  // stay off both cuts
        ++done;
        const cplx lhs = li2(z) + li2(1.0 / z);
        const cplx lg = clog(-z);
        const cplx rhs = -kPi * kPi / 6.0 - 0.5 * lg * lg;
        CHECK(std::abs(lhs - rhs) < 1e-11 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("li2: conjugation symmetry") {
    Rng rng(303);
    for (int i = 0; i < 1000; ++i) {
        cplx z = testutil::random_annulus(rng, 0.05, 5.0);
        if (std::abs(z.imag()) < 1e-9 && z.real() > 1.0) continue;
        CHECK(std::abs(li2(std::conj(z)) - std::conj(li2(z))) < 1e-13 * (1.0 + std::abs(li2(z))));
    }
}

TEST_CASE("li2: derivative matches -log(1-z)/z") {
    Rng rng(404);
    const double h = 1e-6;
    int done = 0;
    while (done < 1000) {
        const cplx z = testutil::random_annulus(rng, 0.1, 3.0);
        if (std::abs(z.imag()) < 1e-3 && z.real() > 0.5) continue;  // keep the stencil off the cut
        ++done;
        const cplx fd = (li2(z + h) - li2(z - h)) / (2.0 * h);
        const cplx expect = -clog(1.0 - z) / z;
        CHECK(std::abs(fd - expect) < 1e-7 * (1.0 + std::abs(expect)));
    }
}

TEST_CASE("li2: value on the cut is the lower-side limit") {
    const cplx v = li2({2.0, 0.0});
    CHECK(v.imag() == doctest::Approx(-kPi * std::log(2.0)).epsilon(1e-14));
    const cplx below = li2({2.0, -1e-9});
    CHECK(std::abs(v - below) < 1e-7);
}

TEST_CASE("li2_continued: trivial paths") {
    const cplx z0{0.3, 0.2};
    std::vector<cplx> single{z0};
    CHECK(li2_continued(single) == li2(z0));

    // inside the unit disk, never near the cut
    std::vector<cplx> path;
    for (int i = 0; i <= 40; ++i) {
        const double t = double(i) / 40.0;
        path.push_back(cplx(-0.5 + t * 0.9, 0.4 - 0.5 * t));
    }
    CHECK(std::abs(li2_continued(path) - li2(path.back())) == 0.0);
}

TEST_CASE("li2_continued: monodromy around the branch point") {
    // counterclockwise loop around 1 starting and ending at 1/2
    auto loop = [](int n, int turns) {
        std::vector<cplx> path;
        for (int i = 0; i <= n * turns; ++i) {
            const double phi = kPi + 2.0 * kPi * double(i) / n;
            path.push_back(cplx(1.0, 0.0) + 0.5 * cplx(std::cos(phi), std::sin(phi)));
        }
        return path;
    };
    const cplx once = li2_continued(loop(256, 1));
    const cplx expect = li2({0.5, 0.0}) + cplx(0.0, 2.0 * kPi) * std::log(2.0);
    CHECK(std::abs(once - expect) < 1e-12);

    // refining the same path changes nothing beyond 1e-12
    CHECK(std::abs(li2_continued(loop(1024, 1)) - once) < 1e-12);

    // two turns accumulate twice the correction
    const cplx twice = li2_continued(loop(256, 2));
    CHECK(std::abs(twice - li2({0.5, 0.0}) - cplx(0.0, 4.0 * kPi) * std::log(2.0)) < 1e-12);
}

TEST_CASE("li2_continued: numerical continuation integral agrees") {
    // Independent oracle: integrate -log_c(1 - t)/t along the loop with the
    // log branch unwrapped continuously, Simpson rule per segment.
    const int n = 4000;
    std::vector<cplx> path;
    for (int i = 0; i <= n; ++i) {
        const double phi = kPi + 2.0 * kPi * double(i) / n;
        path.push_back(cplx(1.0, 0.0) + 0.5 * cplx(std::cos(phi), std::sin(phi)));
    }
    cplx acc = li2(path.front());
    double offset = 0.0;  // accumulated 2 pi multiples of the log branch
    cplx prev_log = clog(1.0 - path.front());
    for (int i = 1; i <= n; ++i) {
        const cplx a = path[i - 1], b = path[i];
        cplx lb = clog(1.0 - b) + cplx(0.0, offset);
        while (lb.imag() - prev_log.imag() > kPi) {
            lb -= cplx(0.0, 2.0 * kPi);
            offset -= 2.0 * kPi;
        }
        while (lb.imag() - prev_log.imag() < -kPi) {
            lb += cplx(0.0, 2.0 * kPi);
            offset += 2.0 * kPi;
        }
        const cplx m = 0.5 * (a + b);
        cplx lm = clog(1.0 - m);
        while (lm.imag() - 0.5 * (prev_log.imag() + lb.imag()) > kPi) lm -= cplx(0.0, 2.0 * kPi);
        while (lm.imag() - 0.5 * (prev_log.imag() + lb.imag()) < -kPi) lm += cplx(0.0, 2.0 * kPi);
        acc += (b - a) / 6.0 * (-prev_log / a - 4.0 * lm / m - lb / b);
        prev_log = lb;
    }
    CHECK(std::abs(acc - li2_continued(path)) < 1e-9);
}

TEST_CASE("li2_continued: rejects uncertifiable paths") {
    std::vector<cplx> big_step{{0.0, 0.0}, {2.0, 0.8}};
    CHECK_THROWS_AS(li2_continued(big_step), continuation_error);
    std::vector<cplx> touches{{0.5, 0.0}, {1.0, 0.0}};
    CHECK_THROWS_AS(li2_continued(touches), continuation_error);
    std::vector<cplx> grazes{{1.0 + 5e-10, 0.2}, {1.0 + 5e-10, -0.2}};  // crossing inside the guard band
    CHECK_THROWS_AS(li2_continued(grazes), continuation_error);
}

TEST_CASE("lobachevsky: values against the quadrature oracle") {
    CHECK(lobachevsky(0.0) == 0.0);
    CHECK(std::abs(lobachevsky(kPi / 2.0)) < 1e-12);  // odd + pi-periodic force zero
    CHECK(lobachevsky(kPi / 3.0) ==
          doctest::Approx(testutil::lobachevsky_quadrature(kPi / 3.0)).epsilon(1e-12));
    CHECK(lobachevsky(kPi / 4.0) ==
          doctest::Approx(testutil::lobachevsky_quadrature(kPi / 4.0)).epsilon(1e-12));
    CHECK(lobachevsky(0.7) ==
          doctest::Approx(testutil::lobachevsky_quadrature(0.7)).epsilon(1e-12));
    // the ideal regular tetrahedron volume constant
    CHECK(3.0 * lobachevsky(kPi / 3.0) == doctest::Approx(1.0149416064096536).epsilon(1e-12));
}

TEST_CASE("lobachevsky: periodicity and oddness") {
    Rng rng(505);
    for (int i = 0; i < 300; ++i) {
        const double t = rng.uniform(-6.0, 6.0);
        CHECK(std::abs(lobachevsky(t + kPi) - lobachevsky(t)) < 1e-12);
        CHECK(std::abs(lobachevsky(-t) + lobachevsky(t)) < 1e-12);
    }
}
