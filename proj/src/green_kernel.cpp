#include "hypspec/green_kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hypspec/special_functions.hpp"

namespace hypspec {

namespace {

constexpr double kPi = std::numbers::pi;

void require_quadrature(const QuadratureConfig& cfg) {
    if (!(cfg.rel_tol > 0.0) || cfg.rel_tol > 1e-4) {
        throw std::invalid_argument("QuadratureConfig: rel_tol must lie in (0, 1e-4]");
    }
    if (cfg.max_panels < 16) {
        throw std::invalid_argument("QuadratureConfig: max_panels must be >= 16");
    }
    if (!(cfg.truncation_margin > 0.0)) {
        throw std::invalid_argument("QuadratureConfig: truncation_margin must be positive");
    }
}

}  // namespace

double c0_constant() {
    const double half_pi = kPi / 2.0;
    return (1.0 + half_pi / std::tanh(half_pi)) / (4.0 * kPi);
}

Complex green_eval(const SpectralPoint& pt, double d, const QuadratureConfig& cfg) {
    require_quadrature(cfg);
    if (!(d > 0.0)) {
        throw std::invalid_argument("green_eval: requires d > 0 (kernel diverges on the diagonal)");
    }
    const Complex s = pt.s;
    const double sigma = s.real() - 0.5;
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("green_eval: requires Re s > 1/2");
    }

    // After r = d + u^2 the integrand is
    //   2 exp(-(d+u^2)(s-1/2)) (sinhc(u^2/2) sinh(d+u^2/2))^{-1/2}.
    const Complex sm = s - 0.5;
    auto f = [&](double u) -> Complex {
        const double u2 = u * u;
        Complex w = -(d + u2) * sm;
        w -= 0.5 * (special::log_sinhc(0.5 * u2) + special::log_sinh(d + 0.5 * u2));
        return 2.0 * std::exp(w);
    };

    const double cutoff = std::sqrt(cfg.truncation_margin / sigma);
    const Complex integral = integrate_gk(f, 0.0, cutoff, cfg.rel_tol, cfg.max_panels);

    // Beyond the cutoff the integrand is dominated by |f(cutoff)| times a
    // Gaussian in u, so the tail is at most |f(cutoff)|/(2 cutoff sigma).
    const double tail = std::abs(f(cutoff)) / (2.0 * cutoff * sigma);
    if (tail > 10.0 * cfg.rel_tol * std::abs(integral)) {
        throw std::runtime_error("green_eval: truncation margin too small for requested rel_tol");
    }

    return integral / (2.0 * std::sqrt(2.0) * kPi);
}

double l1_norm_exact(Complex z) {
    const double x = z.real();
    if (!(x > 0.0)) {
        throw std::invalid_argument("l1_norm_exact: requires Re z > 0");
    }
    return 1.0 / (x * (x + 1.0));
}

double elstrodt_bound(const SpectralPoint& pt) {
    const Complex s = pt.s;
    if (!(s.real() > 0.5)) {
        throw std::invalid_argument("elstrodt_bound: requires Re s > 1/2");
    }
    if (pt.lambda.imag() == 0.0) {
        return special::trigamma(s.real()) / (4.0 * kPi * (s.real() - 0.5));
    }
    return std::abs(special::digamma(s).imag()) / (2.0 * kPi * std::abs(pt.lambda.imag()));
}

double l2_norm_bound(const SpectralPoint& pt) {
    const Complex z = pt.s - 0.5;  // half-plane coordinate for p = 2
    if (!(z.real() > 0.0)) {
        throw std::invalid_argument("l2_norm_bound: requires Re s > 1/2");
    }
    return c0_constant() / (std::abs(z + 0.5) * z.real());
}

double lp_norm_bound(double p, Complex z) {
    if (!(p >= 1.0) || p >= 2.0) {
        throw std::invalid_argument("lp_norm_bound: requires 1 <= p < 2");
    }
    const double x = z.real();
    if (!(x > 0.0)) {
        throw std::invalid_argument("lp_norm_bound: requires Re z > 0");
    }
    return std::pow(c0_constant(), 1.0 - 1.0 / p) * std::pow(1.0 / (x * (x + 0.5)), 1.0 / p);
}

double measured_lp_norm(const SpectralPoint& pt, double p, const QuadratureConfig& cfg) {
    require_quadrature(cfg);
    if (!(p >= 1.0)) {
        throw std::invalid_argument("measured_lp_norm: requires p >= 1");
    }
    // sinh(r)|G(r)|^p decays like exp(r(1 - p Re s)).
    const double decay = p * pt.s.real() - 1.0;
    if (!(decay > 0.0)) {
        throw std::invalid_argument("measured_lp_norm: norm is infinite (p Re s <= 1)");
    }
    const double upper = (cfg.truncation_margin + 10.0) / decay;
    auto f = [&](double r) {
        return std::sinh(r) * std::pow(std::abs(green_eval(pt, r, cfg)), p);
    };
    const double integral = integrate_gk(f, 0.0, upper, std::max(cfg.rel_tol, 1e-9), cfg.max_panels);
    return std::pow(2.0 * kPi * integral, 1.0 / p);
}

KernelNormBudget kernel_norm_budget(const SpectralParams& pp, Complex z) {
    if (!(z.real() > 0.0)) {
        throw std::invalid_argument("kernel_norm_budget: requires Re z > 0");
    }
    SpectralPoint pt;
    pt.z = z;
    pt.s = z + 0.5 + pp.gamma_p;
    pt.lambda = psi_p(pp, z);

    KernelNormBudget out;
    out.c0 = c0_constant();
    out.l1_exact = l1_norm_exact(z);
    out.l2_bound = l2_norm_bound(pt);
    if (pp.p < 2.0) {
        out.lp_bound = lp_norm_bound(pp.p, z);
    }
    return out;
}

}  // namespace hypspec
