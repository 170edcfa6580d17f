#include <doctest.h>

#include <cmath>
#include <complex>

#include "hypspec/rng.hpp"
#include "hypspec/special_functions.hpp"

using namespace hypspec;
using Cx = std::complex<double>;

namespace {

// Series oracle for the digamma function,
//   psi(s) = -gamma_EM + sum_{n>=0} (1/(n+1) - 1/(n+s)),
// summed to several depths and Richardson-extrapolated in 1/N.  Independent
// of the asymptotic Bernoulli expansion used by the implementation.
Cx digamma_series_oracle(Cx s) {
    constexpr double kEulerMascheroni = 0.57721566490153286;
    const int depths[4] = {40000, 80000, 160000, 320000};
    const std::complex<long double> sl(s.real(), s.imag());
    Cx tail[4];
    std::complex<long double> partial = 0.0L;
    int n = 0;
    for (int k = 0; k < 4; ++k) {
        for (; n < depths[k]; ++n) {
            partial += 1.0L / (n + 1.0L) - 1.0L / (sl + static_cast<long double>(n));
        }
        tail[k] = Cx(static_cast<double>(partial.real()),
                     static_cast<double>(partial.imag()));
    }
    // Error of the partial sum is a1/N + a2/N^2 + ...; Neville elimination on
    // the nodes h = 1/N removes three orders.
    double h[4];
    for (int k = 0; k < 4; ++k) h[k] = 1.0 / depths[k];
    for (int level = 1; level < 4; ++level) {
        for (int k = 3; k >= level; --k) {
            tail[k] = tail[k] + (tail[k] - tail[k - 1]) * h[k] / (h[k - level] - h[k]);
        }
    }
    return tail[3] - kEulerMascheroni;
}

}  // namespace

TEST_SUITE("special_functions") {

TEST_CASE("digamma at the classical anchors") {
    constexpr double kEulerMascheroni = 0.57721566490153286;
    CHECK(special::digamma(Cx(1.0, 0.0)).real() ==
          doctest::Approx(-kEulerMascheroni).epsilon(1e-13));
    CHECK(special::digamma(Cx(1.0, 0.0)).imag() == 0.0);
    CHECK(special::digamma(Cx(2.0, 0.0)).real() ==
          doctest::Approx(1.0 - kEulerMascheroni).epsilon(1e-13));
    // psi(1/2) = -gamma_EM - 2 ln 2.
    CHECK(special::digamma(Cx(0.5, 0.0)).real() ==
          doctest::Approx(-kEulerMascheroni - 2.0 * std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("digamma agrees with the series oracle off the real axis") {
    const Cx points[] = {{1.0, 0.0},  {2.0, 0.0},   {0.7, 0.0},  {5.5, 0.0},
                         {1.0, 1.0},  {0.6, -2.0},  {3.0, 10.0}, {0.51, 0.01},
                         {12.0, 4.0}, {0.75, -0.4}};
    for (const Cx& s : points) {
        CAPTURE(s.real());
        CAPTURE(s.imag());
        const Cx oracle = digamma_series_oracle(s);
        const Cx got = special::digamma(s);
        CHECK(std::abs(got - oracle) <= 1e-11 * (1.0 + std::abs(oracle)));
    }
}

TEST_CASE("digamma recurrence psi(s+1) = psi(s) + 1/s") {
    SampleRng rng(101u);
    for (int i = 0; i < 200; ++i) {
        const Cx s = {rng.uniform(0.1, 8.0), rng.uniform(-8.0, 8.0)};
        const Cx lhs = special::digamma(s + 1.0);
        const Cx rhs = special::digamma(s) + 1.0 / s;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
    }
    CHECK_THROWS_AS(special::digamma(Cx(0.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(special::digamma(Cx(-3.0, 0.0)), std::domain_error);
}

TEST_CASE("trigamma anchors and monotonicity") {
    // psi'(1) = pi^2/6, psi'(1/2) = pi^2/2.
    const double pi2 = 9.869604401089358;
    CHECK(special::trigamma(1.0) == doctest::Approx(pi2 / 6.0).epsilon(1e-12));
    CHECK(special::trigamma(0.5) == doctest::Approx(pi2 / 2.0).epsilon(1e-12));
    // Positive and decreasing for real s > 1/2; matches the digamma slope.
    double prev = special::trigamma(0.51);
    for (double s = 0.7; s < 12.0; s += 0.45) {
        const double cur = special::trigamma(s);
        CHECK(cur > 0.0);
        CHECK(cur < prev);
        const double h = 1e-5;
        const double fd = (special::digamma(Cx(s + h, 0.0)).real() -
                           special::digamma(Cx(s - h, 0.0)).real()) /
                          (2.0 * h);
        CHECK(cur == doctest::Approx(fd).epsilon(1e-7));
        prev = cur;
    }
    CHECK_THROWS_AS(special::trigamma(0.0), std::domain_error);
}

TEST_CASE("log_sinh tracks log(sinh) and never overflows") {
    for (double x = 1e-6; x < 18.0; x *= 3.1) {
        CHECK(special::log_sinh(x) ==
              doctest::Approx(std::log(std::sinh(x))).epsilon(1e-13));
    }
    const double big = 800.0;
    CHECK(std::isfinite(special::log_sinh(big)));
    CHECK(special::log_sinh(big) ==
          doctest::Approx(big - std::log(2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(special::log_sinh(0.0), std::domain_error);
}

TEST_CASE("sinhc branches agree at the seam") {
    CHECK(special::sinhc(0.0) == 1.0);
    for (double x : {1e-9, 1e-6, 9.9e-5, 1.01e-4, 1e-3, 0.1, 2.0}) {
        // Reference via expm1: sinh(x)/x = (e^x - e^{-x})/(2x).
        const double ref = (std::expm1(x) - std::expm1(-x)) / (2.0 * x);
        CHECK(special::sinhc(x) == doctest::Approx(ref).epsilon(1e-14));
        CHECK(special::sinhc(-x) == doctest::Approx(ref).epsilon(1e-14));
    }
}

TEST_CASE("log_sinhc is finite and consistent across branches") {
    for (double x : {1e-9, 9.9e-5, 1.01e-4, 1.0, 19.9, 20.1, 700.0}) {
        const double got = special::log_sinhc(x);
        CHECK(std::isfinite(got));
        if (x < 30.0) {
            CHECK(got == doctest::Approx(std::log(special::sinhc(x))).epsilon(1e-12));
        } else {
            CHECK(got == doctest::Approx(x - std::log(2.0) - std::log(x)).epsilon(1e-14));
        }
    }
    CHECK(special::log_sinhc(0.0) == 0.0);
    CHECK_THROWS_AS(special::log_sinhc(-1.0), std::domain_error);
}

}  // TEST_SUITE
