#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hypspec/rng.hpp"
#include "hypspec/spectral_regions.hpp"

using namespace hypspec;

namespace {

// Dense-sampling distance oracle: scan the boundary parameter on a wide
// window, then fit a parabola through the best bracket.  Slow but free of
// the bracketing logic used by the implementation.
double dist_oracle(const SpectralParams& pp, Complex lam) {
    if (sigma_p_contains(pp, lam)) return 0.0;
    const double v = pp.vertex;
    const double c = 2.0 * pp.gamma_p;
    const double x = lam.real();
    const double y = lam.imag();
    const double w = 2.0 + 2.0 * std::sqrt(std::abs(x - v) + std::abs(y)) +
                     (c > 0.0 ? std::abs(y) / c : 0.0);
    auto gap2 = [&](double t) {
        const double dx = x - v - t * t;
        const double dy = y - c * t;
        return dx * dx + dy * dy;
    };
    const int n = 400001;
    double best = std::numeric_limits<double>::infinity();
    int ibest = 0;
    for (int i = 0; i < n; ++i) {
        const double t = -w + 2.0 * w * i / (n - 1);
        const double f = gap2(t);
        if (f < best) {
            best = f;
            ibest = i;
        }
    }
    if (ibest > 0 && ibest < n - 1) {
        const double h = 2.0 * w / (n - 1);
        const double t0 = -w + 2.0 * w * ibest / (n - 1);
        const double fm = gap2(t0 - h), f0 = gap2(t0), fp = gap2(t0 + h);
        const double denom = fm - 2.0 * f0 + fp;
        if (denom > 0.0) {
            const double t_star = t0 + 0.5 * h * (fm - fp) / denom;
            best = std::min(best, gap2(t_star));
        }
    }
    return std::sqrt(best);
}

}  // namespace

TEST_SUITE("spectral_regions") {

TEST_CASE("parameter geometry") {
    for (double p : {1.0, 1.2, 1.5, 2.0, 3.0, 4.0, 10.0, 100.0}) {
        CAPTURE(p);
        const SpectralParams pp(p);
        CHECK(pp.gamma_p == doctest::Approx(0.5 * std::abs(1.0 - 2.0 / p)).epsilon(1e-14));
        CHECK(std::abs(pp.gamma_p * pp.gamma_p - (0.25 - pp.vertex)) <= 1e-14);
        if (p > 1.0) {
            const SpectralParams pc(pp.p_conj);
            CHECK(std::abs(pc.gamma_p - pp.gamma_p) <= 1e-14);
            CHECK(std::abs(pc.vertex - pp.vertex) <= 1e-14);
        }
    }
    const SpectralParams p1(1.0);
    CHECK(std::isinf(p1.p_conj));
    CHECK(p1.vertex == 0.0);
    CHECK(p1.gamma_p == 0.5);
    const SpectralParams p2(2.0);
    CHECK(p2.vertex == 0.25);
    CHECK(p2.gamma_p == 0.0);
    CHECK_THROWS_AS(SpectralParams(0.9), std::invalid_argument);
    CHECK_THROWS_AS(SpectralParams(std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
}

TEST_CASE("psi_p at the reference points") {
    const SpectralParams p2(2.0);
    CHECK(std::abs(psi_p(p2, Complex(0.5, 0.0)) - Complex(0.0, 0.0)) <= 1e-15);
    const SpectralParams p4(4.0);
    CHECK(std::abs(psi_p(p4, Complex(1.0, 0.0)) - Complex(-21.0 / 16.0, 0.0)) <= 1e-15);
    CHECK_THROWS_AS(psi_p(p2, Complex(0.0, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(psi_p(p2, Complex(-0.1, 0.0)), std::invalid_argument);
}

TEST_CASE("psi_p_inv at the reference points") {
    const SpectralParams p2(2.0);
    const SpectralPoint a = psi_p_inv(p2, Complex(0.0, 0.0));
    CHECK(std::abs(a.z - Complex(0.5, 0.0)) <= 1e-15);
    CHECK(std::abs(a.s - Complex(1.0, 0.0)) <= 1e-15);

    const SpectralParams p4(4.0);
    const SpectralPoint b = psi_p_inv(p4, Complex(-21.0 / 16.0, 0.0));
    CHECK(std::abs(b.z - Complex(1.0, 0.0)) <= 1e-14);

    const SpectralPoint c = psi_p_inv(p2, Complex(3.25, -4.0));
    CHECK(std::abs(c.z - Complex(1.0, 2.0)) <= 1e-14);
    CHECK(std::abs(c.s - Complex(1.5, 2.0)) <= 1e-14);

    CHECK_THROWS_AS(psi_p_inv(p2, Complex(0.5, 0.0)), std::invalid_argument);
}

TEST_CASE("round trip and coordinate invariants on sampled points") {
    SampleRng rng(111u);
    for (double p : {1.2, 1.5, 2.0, 3.0, 4.0, 10.0}) {
        const SpectralParams pp(p);
        for (int i = 0; i < 200; ++i) {
            const Complex lam = rng.box(-4.0, 4.0, -4.0, 4.0);
            if (sigma_p_contains(pp, lam)) continue;
            const SpectralPoint pt = psi_p_inv(pp, lam);
            CHECK(pt.z.real() > 0.0);
            CHECK(pt.s.real() > 0.5);
            CHECK(std::abs(pt.s - (pt.z + 0.5 + pp.gamma_p)) <= 1e-12);
            CHECK(std::abs(psi_p(pp, pt.z) - lam) <= 1e-12 * (1.0 + std::abs(lam)));
        }
    }
}

TEST_CASE("membership at the reference points") {
    const SpectralParams p2(2.0);
    CHECK(sigma_p_contains(p2, Complex(0.5, 0.0)));
    CHECK(!sigma_p_contains(p2, Complex(0.5, 0.1)));
    CHECK(!sigma_p_contains(p2, Complex(0.2, 0.0)));
    const SpectralParams p4(4.0);
    CHECK(sigma_p_contains(p4, Complex(0.25, 0.0)));
    CHECK(sigma_p_contains(p4, Complex(3.0 / 16.0, 0.0)));
    CHECK(!sigma_p_contains(p4, Complex(3.0 / 16.0 - 1e-12, 0.0)));
}

TEST_CASE("distance at the reference points") {
    const SpectralParams p2(2.0);
    CHECK(dist_to_sigma_p(p2, Complex(-0.75, 0.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dist_to_sigma_p(p2, Complex(3.25, -4.0)) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(dist_to_sigma_p(p2, Complex(0.5, 0.0)) == 0.0);

    // p = 4, lambda = -1: the nearest boundary point is the vertex, so the
    // distance is 1 + 3/16 = 19/16; the dense oracle confirms the minimizer.
    const SpectralParams p4(4.0);
    const double got = dist_to_sigma_p(p4, Complex(-1.0, 0.0));
    CHECK(got == doctest::Approx(19.0 / 16.0).epsilon(1e-9));
    CHECK(dist_oracle(p4, Complex(-1.0, 0.0)) == doctest::Approx(19.0 / 16.0).epsilon(1e-9));
    CHECK(dist_to_sigma_p(p4, Complex(1.0, 0.1)) == 0.0);
}

TEST_CASE("distance agrees with the dense oracle on sampled points") {
    SampleRng rng(112u);
    for (double p : {1.5, 4.0}) {
        const SpectralParams pp(p);
        int done = 0;
        while (done < 12) {
            const Complex lam = rng.box(-3.0, 3.0, -3.0, 3.0);
            if (sigma_p_contains(pp, lam)) continue;
            const double got = dist_to_sigma_p(pp, lam);
            const double ref = dist_oracle(pp, lam);
            CAPTURE(p);
            CAPTURE(lam.real());
            CAPTURE(lam.imag());
            CHECK(got == doctest::Approx(ref).epsilon(1e-6));
            CHECK(got <= ref * (1.0 + 1e-9) + 1e-12);
            ++done;
        }
    }
}

TEST_CASE("boundary curve samples") {
    const SpectralParams p2(2.0);
    const auto line = boundary_curve(p2, -2.0, 2.0, 41);
    REQUIRE(line.size() == 41);
    for (const Complex& pt : line) {
        CHECK(pt.imag() == 0.0);
        CHECK(pt.real() >= 0.25);
        CHECK(sigma_p_contains(p2, pt));
    }
    CHECK(line.front().real() == doctest::Approx(0.25 + 4.0));

    const SpectralParams p4(4.0);
    const auto par = boundary_curve(p4, -1.5, 1.5, 31);
    CHECK(par[15].real() == doctest::Approx(3.0 / 16.0).epsilon(1e-15));
    CHECK(par[15].imag() == 0.0);
    for (const Complex& pt : par) {
        // Curve points can land an ulp outside after rounding, so test the
        // distance and a slightly deepened copy rather than exact membership.
        CHECK(dist_to_sigma_p(p4, pt) <= 1e-9);
        CHECK(sigma_p_contains(p4, Complex(pt.real() + 1e-9, pt.imag())));
    }
    CHECK_THROWS_AS(boundary_curve(p4, 0.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("conjugate exponents define the same region") {
    SampleRng rng(113u);
    for (int i = 0; i < 300; ++i) {
        const double p = 1.0 + rng.uniform(0.02, 0.98);
        const SpectralParams pp(p);
        const SpectralParams pc(pp.p_conj);
        const Complex lam = rng.box(-3.0, 3.0, -3.0, 3.0);
        CHECK(sigma_p_contains(pp, lam) == sigma_p_contains(pc, lam));
        const double d1 = dist_to_sigma_p(pp, lam);
        const double d2 = dist_to_sigma_p(pc, lam);
        CHECK(std::abs(d1 - d2) <= 1e-12 * std::max({d1, d2, 1.0}));
    }
}

}  // TEST_SUITE
