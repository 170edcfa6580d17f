#include <doctest.h>

#include <cmath>

#include "hypspec/geometry.hpp"
#include "hypspec/rng.hpp"

using namespace hypspec;

namespace {

// Reference for acosh(1+q): since 1 + 2 sinh^2 t = cosh 2t, the value equals
// 2 asinh(sqrt(q/2)), a route with no cancellation at any scale and no code
// shared with the implementation.
double acosh1p_reference(double q) {
    return 2.0 * std::asinh(std::sqrt(0.5 * q));
}

// Law of cosines on the radii/angle triple, accurate when the two radii are
// well separated; used to cross-check the cancellation-free evaluation.
double polar_distance_cosines(double r1, double r2, double xi) {
    return std::acosh(std::cosh(r1) * std::cosh(r2) -
                      std::sinh(r1) * std::sinh(r2) * std::cos(xi));
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("acosh1p matches the stable closed form on all scales") {
    CHECK(acosh1p(0.0) == 0.0);
    for (double q = 1e-300; q < 50.0; q *= 13.7) {
        CAPTURE(q);
        CHECK(acosh1p(q) == doctest::Approx(acosh1p_reference(q)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(acosh1p(-1e-16), std::invalid_argument);
}

TEST_CASE("distance examples") {
    CHECK(geodesic_distance({0.3, 2.0}, {0.3, 2.0}) == 0.0);
    CHECK(geodesic_distance({0.0, 1.0}, {0.0, std::exp(1.0)}) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(geodesic_distance({1.0, 1.0}, {0.0, 1.0}) ==
          doctest::Approx(std::acosh(1.5)).epsilon(1e-14));
    CHECK_THROWS_AS(geodesic_distance({0.0, 0.0}, {0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(geodesic_distance({0.0, 1.0}, {0.0, -2.0}), std::invalid_argument);
}

TEST_CASE("distance is symmetric, definite and stable for near-equal points") {
    SampleRng rng(91u);
    for (int i = 0; i < 200; ++i) {
        const HyperPoint a{rng.uniform(-5.0, 5.0), rng.log_uniform(1e-3, 1e3)};
        const HyperPoint b{rng.uniform(-5.0, 5.0), rng.log_uniform(1e-3, 1e3)};
        const double dab = geodesic_distance(a, b);
        CHECK(dab >= 0.0);
        CHECK(dab == geodesic_distance(b, a));
    }
    // Separation 1e-10 in the model coordinates must survive the arccosh.
    const HyperPoint a{0.0, 1.0};
    const HyperPoint b{1e-10, 1.0};
    CHECK(geodesic_distance(a, b) == doctest::Approx(1e-10).epsilon(1e-9));
}

TEST_CASE("triangle inequality on sampled triples") {
    SampleRng rng(92u);
    for (int i = 0; i < 500; ++i) {
        const HyperPoint a{rng.uniform(-3.0, 3.0), rng.log_uniform(0.1, 10.0)};
        const HyperPoint b{rng.uniform(-3.0, 3.0), rng.log_uniform(0.1, 10.0)};
        const HyperPoint c{rng.uniform(-3.0, 3.0), rng.log_uniform(0.1, 10.0)};
        const double ab = geodesic_distance(a, b);
        const double bc = geodesic_distance(b, c);
        const double ac = geodesic_distance(a, c);
        CHECK(ac <= ab + bc + 1e-12 * (1.0 + ab + bc));
    }
}

TEST_CASE("translations and dilations are isometries") {
    SampleRng rng(93u);
    for (int i = 0; i < 200; ++i) {
        const HyperPoint a{rng.uniform(-3.0, 3.0), rng.log_uniform(0.1, 10.0)};
        const HyperPoint b{rng.uniform(-3.0, 3.0), rng.log_uniform(0.1, 10.0)};
        const double d = geodesic_distance(a, b);
        const double c = rng.uniform(-7.0, 7.0);
        const double scale = rng.log_uniform(0.05, 20.0);
        const double dt = geodesic_distance({a.y + c, a.t}, {b.y + c, b.t});
        const double ds =
            geodesic_distance({scale * a.y, scale * a.t}, {scale * b.y, scale * b.t});
        CHECK(dt == doctest::Approx(d).epsilon(1e-12));
        CHECK(ds == doctest::Approx(d).epsilon(1e-12));
    }
}

TEST_CASE("polar volume weight") {
    CHECK(polar_volume_weight(0.0) == 0.0);
    CHECK(polar_volume_weight(1.0) == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
    CHECK(polar_volume_weight(10.0) ==
          doctest::Approx((std::exp(10.0) - std::exp(-10.0)) / 2.0).epsilon(1e-15));
    CHECK_THROWS_AS(polar_volume_weight(-0.1), std::invalid_argument);
}

TEST_CASE("polar points sit at the requested radius") {
    SampleRng rng(94u);
    for (int i = 0; i < 200; ++i) {
        const PolarCoord pc{rng.log_uniform(1e-6, 20.0), rng.uniform(0.0, 6.283)};
        const HyperPoint x = polar_to_point(pc);
        CHECK(geodesic_distance({0.0, 1.0}, x) ==
              doctest::Approx(pc.r).epsilon(1e-10));
    }
    const HyperPoint base = polar_to_point({0.0, 1.3});
    CHECK(base.y == doctest::Approx(0.0));
    CHECK(base.t == doctest::Approx(1.0));
}

TEST_CASE("polar distance agrees with the two-point distance") {
    SampleRng rng(95u);
    for (int i = 0; i < 300; ++i) {
        const double r1 = rng.log_uniform(1e-4, 15.0);
        const double r2 = rng.log_uniform(1e-4, 15.0);
        const double xi = rng.uniform(0.0, 6.283);
        const double via_points = geodesic_distance(polar_to_point({r1, 0.0}),
                                                    polar_to_point({r2, xi}));
        CHECK(polar_distance(r1, r2, xi) ==
              doctest::Approx(via_points).epsilon(1e-9));
    }
}

TEST_CASE("polar distance matches the law of cosines away from cancellation") {
    SampleRng rng(96u);
    for (int i = 0; i < 300; ++i) {
        const double r1 = rng.uniform(0.5, 6.0);
        const double r2 = r1 + rng.uniform(0.5, 4.0);
        const double xi = rng.uniform(0.3, 5.9);
        CHECK(polar_distance(r1, r2, xi) ==
              doctest::Approx(polar_distance_cosines(r1, r2, xi)).epsilon(1e-12));
    }
}

TEST_CASE("polar distance survives the near-equal regime") {
    // Equal radii: cosh d - 1 = 2 sinh^2(r) sin^2(xi/2) exactly, so
    // d = 2 asinh(sinh(r) sin(xi/2)).
    const double r = 1.0;
    for (double xi = 1e-3; xi > 1e-12; xi *= 1e-3) {
        const double expected = 2.0 * std::asinh(std::sinh(r) * std::sin(0.5 * xi));
        CHECK(polar_distance(r, r, xi) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(polar_distance(2.0, 2.0, 0.0) == 0.0);
}

}  // TEST_SUITE
