#pragma once

#include <complex>

namespace hypspec::special {

/// Digamma on the complex plane minus the poles {0, -1, -2, ...}.
/// Recurrence shift to Re s >= 10 followed by the asymptotic series;
/// absolute accuracy ~1e-14 away from the poles.
std::complex<double> digamma(std::complex<double> s);

/// Trigamma (derivative of digamma) for real s > 0.
double trigamma(double s);

/// log(sinh x) for x > 0, overflow-free for large x.
double log_sinh(double x);

/// sinh(x)/x with the series branch below |x| = 1e-4.
double sinhc(double x);

/// log(sinh(x)/x) for x >= 0, overflow-free for large x.
double log_sinhc(double x);

}  // namespace hypspec::special
