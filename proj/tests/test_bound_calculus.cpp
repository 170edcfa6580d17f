#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hypspec/bound_calculus.hpp"
#include "hypspec/green_kernel.hpp"
#include "hypspec/rng.hpp"

using namespace hypspec;

TEST_SUITE("bound_calculus") {

TEST_CASE("resolvent norm at the reference points") {
    const SpectralParams p2(2.0);
    CHECK(resolvent_norm_bound(p2, Complex(1.0, 0.0)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    const SpectralParams p1(1.0);
    CHECK(resolvent_norm_bound(p1, Complex(1.0, 0.0)) ==
          doctest::Approx(0.5).epsilon(1e-14));
    CHECK_THROWS_AS(resolvent_norm_bound(p2, Complex(-1.0, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("resolvent bounds are continuous in p near 2") {
    // On points with |Im z| > Re z the p = 2 value sits strictly below the
    // p != 2 bound, and the latter converges to 1/(Re z)^2 as p -> 2.
    const Complex grid[] = {{0.3, 0.7}, {1.0, 2.0}, {2.0, 5.0}, {0.5, -1.1}};
    for (const Complex& z : grid) {
        const double exact2 = resolvent_norm_bound(SpectralParams(2.0), z);
        const double limit = 1.0 / (z.real() * z.real());
        double prev_gap = std::numeric_limits<double>::infinity();
        for (double p : {1.9, 1.99, 1.999}) {
            const double bp = resolvent_norm_bound(SpectralParams(p), z);
            CHECK(exact2 <= bp * (1.0 + 1e-12));
            const double gap = std::abs(bp - limit) / limit;
            CHECK(gap < prev_gap);
            prev_gap = gap;
        }
        CHECK(prev_gap < 1e-2);
    }
}

TEST_CASE("operator norm budget for bounded potentials") {
    const SpectralParams p2(2.0);
    CHECK(bs_opnorm_bound(p2, Complex(1.0, 0.0), 0.0) == 0.0);
    CHECK(bs_opnorm_bound(p2, Complex(1.0, 0.0), 1.0) ==
          doctest::Approx(1.0).epsilon(1e-14));
    const SpectralParams p4(4.0);
    CHECK(bs_opnorm_bound(p4, Complex(1.0, 0.0), 2.0) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(bs_opnorm_bound(SpectralParams(1.5), Complex(1.0, 0.0), 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(bs_opnorm_bound(p2, Complex(1.0, 0.0), -1.0),
                    std::invalid_argument);
}

TEST_CASE("summing budgets at the reference points") {
    const SpectralParams p2(2.0);
    PotentialSpec pot;
    pot.r = 2.0;
    pot.v_norm = 1.7;

    const Complex z(0.5, 0.0);
    const SummingBounds sb = bs_summing_bound(p2, z, pot);
    REQUIRE(sb.power_p.has_value());
    CHECK(*sb.power_p ==
          doctest::Approx(2.0 * c0_constant() * pot.v_norm * pot.v_norm)
              .epsilon(1e-14));
    CHECK(sb.summing > 0.0);
    CHECK(sb.simplified > 0.0);

    pot.v_norm = 0.0;
    const SummingBounds zero = bs_summing_bound(p2, z, pot);
    CHECK(*zero.power_p == 0.0);
    CHECK(zero.summing == 0.0);
    CHECK(zero.simplified == 0.0);

    pot.v_norm = 1.0;
    pot.r = 3.0;
    CHECK(!bs_summing_bound(p2, z, pot).power_p.has_value());

    const SpectralParams p3(3.0);
    pot.r = 3.0;
    const SummingBounds cubed = bs_summing_bound(p3, Complex(1.0, 0.0), pot);
    REQUIRE(cubed.power_p.has_value());
    CHECK(*cubed.power_p ==
          doctest::Approx(c0_constant() * std::pow(1.0 / 1.5, 2.0)).epsilon(1e-14));

    pot.r = 1.5;
    CHECK_THROWS_AS(bs_summing_bound(p2, z, pot), std::invalid_argument);
    pot.r = 4.0;
    CHECK_THROWS_AS(bs_summing_bound(SpectralParams(1.2), z, pot),
                    std::invalid_argument);
}

TEST_CASE("squared-norm exclusion certificate at the reference points") {
    PotentialSpec pot;
    pot.r = 2.0;
    pot.v_norm = 1.0;
    const EnclosureVerdict v = l2_exclusion_certificate(pot, Complex(-0.75, 0.0));
    CHECK(v.lhs == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(v.rhs ==
          doctest::Approx(std::pow(2.0, 1.5) * c0_constant()).epsilon(1e-14));
    CHECK(v.excluded);

    pot.v_norm = 10.0;
    const EnclosureVerdict w = l2_exclusion_certificate(pot, Complex(-0.75, 0.0));
    CHECK(w.rhs == doctest::Approx(std::pow(2.0, 1.5) * c0_constant() * 100.0)
                       .epsilon(1e-13));
    CHECK(!w.excluded);

    pot.v_norm = 0.0;
    SampleRng rng(121u);
    for (int i = 0; i < 100; ++i) {
        const Complex lam = rng.box(-3.0, 3.0, -2.0, 2.0);
        if (lam.real() >= 0.25 && std::abs(lam.imag()) < 1e-6) continue;
        const EnclosureVerdict zero = l2_exclusion_certificate(pot, lam);
        CHECK(zero.rhs == 0.0);
        CHECK(zero.excluded);
        CHECK(zero.excluded == (zero.log_lhs > zero.log_rhs));
    }

    pot.r = 1.5;
    CHECK_THROWS_AS(l2_exclusion_certificate(pot, Complex(-1.0, 0.0)),
                    std::invalid_argument);
    pot.r = 2.0;
    CHECK_THROWS_AS(l2_exclusion_certificate(pot, Complex(0.5, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("non-excluded points obey the distance consequence") {
    SampleRng rng(122u);
    for (double r : {2.0, 3.0}) {
        PotentialSpec pot;
        pot.r = r;
        pot.v_norm = 0.8;
        const double dist_cap = std::pow(2.0, 1.5 / (r - 1.0)) *
                                std::pow(c0_constant(), 1.0 / (r - 1.0)) *
                                std::pow(pot.v_norm, r / (r - 1.0));
        for (int i = 0; i < 400; ++i) {
            const Complex lam = rng.box(-3.0, 3.0, -2.0, 2.0);
            const double dist = lam.real() >= 0.25
                                    ? std::abs(lam.imag())
                                    : std::hypot(lam.real() - 0.25, lam.imag());
            if (dist <= 1e-6) continue;
            const EnclosureVerdict v = l2_exclusion_certificate(pot, lam);
            if (!v.excluded) {
                CHECK(dist <= dist_cap * (1.0 + 1e-12));
            }
        }
    }
}

TEST_CASE("general-exponent certificate and its duality") {
    const SpectralParams p4(4.0);
    PotentialSpec pot;
    pot.r = 4.0;
    pot.v_norm = 1.0;
    const Complex lam(-1.0, 0.0);
    const EnclosureVerdict v = lp_exclusion_certificate(p4, pot, lam);

    const double dist = dist_to_sigma_p(p4, lam);
    const double m = std::sqrt(std::abs(0.25 - lam));
    const double expected_log_lhs =
        6.0 * (std::log(dist) - std::log(m)) + 3.0 * std::log1p(m / (8.0 * dist));
    CHECK(v.log_lhs == doctest::Approx(expected_log_lhs).epsilon(1e-14));
    CHECK(v.rhs ==
          doctest::Approx(std::pow(16.0, 6.0) * c0_constant()).epsilon(1e-13));
    CHECK(!v.excluded);

    const EnclosureVerdict dual =
        lp_exclusion_certificate(SpectralParams(4.0 / 3.0), pot, lam);
    CHECK(std::abs(v.log_lhs - dual.log_lhs) <= 1e-12 * (1.0 + std::abs(v.log_lhs)));
    CHECK(std::abs(v.log_rhs - dual.log_rhs) <= 1e-12 * (1.0 + std::abs(v.log_rhs)));
    CHECK(v.excluded == dual.excluded);

    CHECK_THROWS_AS(lp_exclusion_certificate(SpectralParams(2.0), pot, lam),
                    std::invalid_argument);
    pot.r = 3.0;
    CHECK_THROWS_AS(lp_exclusion_certificate(p4, pot, lam), std::invalid_argument);
    pot.r = 4.0;
    CHECK_THROWS_AS(lp_exclusion_certificate(p4, pot, Complex(0.3, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("zero potential reduces the enclosure mask to region membership") {
    const SpectralParams p4(4.0);
    PotentialSpec pot;
    pot.r = 4.0;
    pot.v_norm = 0.0;
    const EnclosureMask mask = enclosure_region(p4, pot, -1.0, 0.5, -0.75, 0.75, 16, 12);
    REQUIRE(mask.cells.size() == 16u * 12u);
    const double dx = (mask.x1 - mask.x0) / mask.nx;
    const double dy = (mask.y1 - mask.y0) / mask.ny;
    for (int iy = 0; iy < mask.ny; ++iy) {
        for (int ix = 0; ix < mask.nx; ++ix) {
            const Complex center(mask.x0 + (ix + 0.5) * dx, mask.y0 + (iy + 0.5) * dy);
            CHECK(mask.at(ix, iy) == sigma_p_contains(p4, center));
        }
    }

    // For p = 2 the region is the real half-line; no cell center of an
    // even-row grid lies on it, so nothing survives a zero potential.
    PotentialSpec pot2;
    pot2.r = 2.0;
    pot2.v_norm = 0.0;
    const EnclosureMask empty =
        enclosure_region(SpectralParams(2.0), pot2, -1.0, 0.5, -0.75, 0.75, 16, 12);
    for (auto c : empty.cells) CHECK(c == 0);
}

TEST_CASE("enclosure mask grows with the potential norm") {
    const SpectralParams p2(2.0);
    PotentialSpec small;
    small.r = 2.0;
    small.v_norm = 0.5;
    PotentialSpec large;
    large.r = 2.0;
    large.v_norm = 2.0;
    const EnclosureMask a = enclosure_region(p2, small, -1.0, 0.5, -0.75, 0.75, 24, 24);
    const EnclosureMask b = enclosure_region(p2, large, -1.0, 0.5, -0.75, 0.75, 24, 24);
    long count_a = 0, count_b = 0;
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        if (a.cells[i]) {
            ++count_a;
            CHECK(b.cells[i] == 1);
        }
        count_b += b.cells[i];
    }
    CHECK(count_a > 0);
    CHECK(count_b > count_a);
    CHECK_THROWS_AS(enclosure_region(p2, small, 0.0, 0.0, 0.0, 1.0, 4, 4),
                    std::invalid_argument);
}

TEST_CASE("mask csv renders top row first") {
    EnclosureMask mask;
    mask.x0 = 0.0;
    mask.x1 = 1.0;
    mask.y0 = 0.0;
    mask.y1 = 1.0;
    mask.nx = 3;
    mask.ny = 2;
    mask.cells = {1, 0, 0, 0, 1, 1};  // bottom row first in storage
    CHECK(mask_csv(mask) == "0,1,1\n1,0,0\n");
}

}  // TEST_SUITE
