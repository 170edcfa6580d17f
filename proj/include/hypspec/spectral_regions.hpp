#pragma once

#include <complex>
#include <vector>

namespace hypspec {

using Complex = std::complex<double>;

/// Exponent pair (p, p') together with the derived geometry of the
/// L_p spectral region
///   Sigma_p = { a + ib : a >= 1/(p p'),  b^2 <= (1 - 2/p)^2 (a - 1/(p p')) },
/// a filled parabola with vertex 1/(p p') and focus 1/4.  For p = 2 it
/// degenerates to the half-line [1/4, inf).
struct SpectralParams {
    double p;
    double p_conj;   // p' = p/(p-1); +inf for p = 1
    double gamma_p;  // (1/2)|1 - 2/p|
    double vertex;   // 1/(p p') = 1/4 - gamma_p^2

    explicit SpectralParams(double p_in);
};

/// True iff lambda lies in the closed region Sigma_p.
bool sigma_p_contains(const SpectralParams& pp, Complex lambda);

/// Conformal parametrisation of the complement:
///   Psi_p(z) = 1/(p p') - z^2 - z|1 - 2/p| = 1/4 - (z + gamma_p)^2.
/// Requires Re z > 0.
Complex psi_p(const SpectralParams& pp, Complex z);

/// Inverse coordinates of a point outside Sigma_p.  s is the kernel
/// exponent shared by all p; z the half-plane coordinate for this p.
struct SpectralPoint {
    Complex lambda;
    Complex z;  // -gamma_p + sqrt(1/4 - lambda), Re z > 0
    Complex s;  // 1/2 + sqrt(1/4 - lambda),      Re s > 1/2
};

/// Throws std::invalid_argument when lambda lies in Sigma_p.
SpectralPoint psi_p_inv(const SpectralParams& pp, Complex lambda);

/// Euclidean distance from lambda to Sigma_p; 0 inside.  For p = 2 this is
/// the closed form |z|^2 (when |Im z| <= Re z) or 2 Re z |Im z|; otherwise
/// a bracketed golden-section minimisation over the boundary parabola,
/// started from three brackets to avoid local-minimum capture.
double dist_to_sigma_p(const SpectralParams& pp, Complex lambda);

/// n >= 2 samples of the boundary curve b(t) = vertex + t^2 + i t (1 - 2/p)
/// for t in [t0, t1].
std::vector<Complex> boundary_curve(const SpectralParams& pp, double t0, double t1, int n);

}  // namespace hypspec
