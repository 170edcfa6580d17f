#include "hypspec/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace hypspec::special {

namespace {
// Bernoulli numbers B_2, B_4, ..., B_14
constexpr double kBernoulli[7] = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0};
}  // namespace

std::complex<double> digamma(std::complex<double> s) {
    if (s.imag() == 0.0) {
        const double x = s.real();
        if (x <= 0.0 && x == std::floor(x))
            throw std::domain_error("digamma: pole at non-positive integer");
    }
    std::complex<double> shift = 0.0;
    while (s.real() < 10.0) {
        shift -= 1.0 / s;
        s += 1.0;
    }
    // psi(s) = ln s - 1/(2s) - sum_n B_{2n} / (2n s^{2n})
    const std::complex<double> inv = 1.0 / s;
    const std::complex<double> inv2 = inv * inv;
    std::complex<double> out = std::log(s) - 0.5 * inv;
    std::complex<double> pw = inv2;
    for (int n = 1; n <= 7; ++n) {
        out -= kBernoulli[n - 1] * pw / (2.0 * n);
        pw *= inv2;
    }
    return out + shift;
}

double trigamma(double s) {
    if (!(s > 0.0))
        throw std::domain_error("trigamma: requires s > 0");
    double shift = 0.0;
    while (s < 10.0) {
        shift += 1.0 / (s * s);
        s += 1.0;
    }
    // psi'(s) = 1/s + 1/(2s^2) + sum_n B_{2n} / s^{2n+1}
    const double inv = 1.0 / s;
    const double inv2 = inv * inv;
    double out = inv + 0.5 * inv2;
    double pw = inv * inv2;
    for (int n = 1; n <= 7; ++n) {
        out += kBernoulli[n - 1] * pw;
        pw *= inv2;
    }
    return out + shift;
}

double log_sinh(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_sinh: requires x > 0");
    if (x > 20.0) {
        // sinh x = e^x (1 - e^{-2x}) / 2
        return x - 0.6931471805599453 + std::log1p(-std::exp(-2.0 * x));
    }
    return std::log(std::sinh(x));
}

double sinhc(double x) {
    const double ax = std::fabs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sinh(x) / x;
}

double log_sinhc(double x) {
    if (x < 0.0)
        throw std::domain_error("log_sinhc: requires x >= 0");
    if (x < 1e-4) {
        const double x2 = x * x;
        return std::log1p(x2 / 6.0 + x2 * x2 / 120.0);
    }
    if (x > 20.0)
        return log_sinh(x) - std::log(x);
    return std::log(std::sinh(x) / x);
}

}  // namespace hypspec::special
