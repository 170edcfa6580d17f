#include "hypspec/lieb_thirring.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hypspec {

namespace {

constexpr double kDistFloor = 1e-300;

// Power contribution in log space with the x^0 = 1 convention: a zero
// exponent contributes nothing even when the base vanishes.
double pow_log(double base, double expo) {
    if (expo == 0.0) return 0.0;
    return expo * std::log(base);
}

double ratio_of(double sum, double budget) {
    if (budget > 0.0) return sum / budget;
    return sum == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

void finish_report(LTReport& rep, const LTConstants& consts, double log_small_budget,
                   double log_large_budget) {
    rep.small_budget = consts.c * std::exp(log_small_budget);
    rep.large_budget = consts.c_prime * std::exp(log_large_budget);
    rep.small_satisfied = rep.small_sum <= rep.small_budget;
    rep.large_satisfied = rep.large_sum <= rep.large_budget;
    rep.small_ratio = ratio_of(rep.small_sum, rep.small_budget);
    rep.large_ratio = ratio_of(rep.large_sum, rep.large_budget);
}

}  // namespace

LTParams::LTParams(double alpha_, double beta_, double gamma_, double r_, double tau_,
                   double c1_)
    : alpha(alpha_), beta(beta_), gamma(gamma_), r(r_), tau(tau_), c1(c1_) {
    if (!(alpha >= 0.0) || !(beta >= 0.0) || !(gamma >= 0.0) || !(r >= 0.0)) {
        throw std::invalid_argument("LTParams: alpha, beta, gamma, r must be >= 0");
    }
    if (!(tau > 0.0) || !(c1 > 0.0)) {
        throw std::invalid_argument("LTParams: tau and c1 must be positive");
    }
    if (!(alpha + beta > 0.0)) {
        throw std::invalid_argument("LTParams: requires alpha + beta > 0");
    }
    delta1 = r * alpha + 1.0 + tau;
    delta2 = std::max(r * beta - 1.0 + tau, 0.0);
    delta3 = r * (1.0 - alpha - beta - gamma);
    delta4 = std::max(r * (2.0 - 2.0 * alpha - beta) - 1.0 + tau, 0.0);
    eta = std::pow(2.0 * c1, 1.0 / (alpha + beta));
}

EigenvalueList::EigenvalueList(const SpectralParams& params,
                               std::vector<Eigenvalue> entries)
    : params_(params), entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.mult < 1) {
            throw std::invalid_argument("EigenvalueList: multiplicity must be >= 1");
        }
        if (!std::isfinite(e.lambda.real()) || !std::isfinite(e.lambda.imag())) {
            throw std::invalid_argument("EigenvalueList: eigenvalue must be finite");
        }
        if (sigma_p_contains(params_, e.lambda)) {
            throw std::invalid_argument(
                "EigenvalueList: eigenvalue lies in the spectral region");
        }
    }
}

Complex phi_a(double a, Complex w) {
    if (!(a > 0.0)) {
        throw std::invalid_argument("phi_a: requires a > 0");
    }
    if (!(std::abs(w) < 1.0)) {
        throw std::invalid_argument("phi_a: requires |w| < 1");
    }
    return a * (1.0 - w) / (1.0 + w);
}

Complex phi_a_inv(double a, Complex z) {
    if (!(a > 0.0)) {
        throw std::invalid_argument("phi_a_inv: requires a > 0");
    }
    if (!(z.real() > 0.0)) {
        throw std::invalid_argument("phi_a_inv: requires Re z > 0");
    }
    return (a - z) / (a + z);
}

TransplantBounds disk_transplant_bounds(const SpectralParams& params, double a,
                                        Complex w) {
    const Complex z = phi_a(a, w);
    const Complex lambda = psi_p(params, z);
    const double g = params.gamma_p;
    const double dist = dist_to_sigma_p(params, lambda);
    const double m = std::sqrt(std::abs(0.25 - lambda));
    const double denom = std::norm(1.0 + w);
    const double az2 = std::norm(a + z);
    const double gap = 1.0 - std::abs(w);

    TransplantBounds out;
    out.image_gap.lhs = std::abs(psi_p(params, z) - psi_p(params, Complex(a, 0.0)));
    out.image_gap.rhs = 4.0 * a * (a + 2.0 * g) / denom;
    out.re_lower.lhs = a * gap / denom;
    out.re_lower.rhs = z.real();
    out.re_upper.lhs = z.real();
    out.re_upper.rhs = 2.0 * a * gap / denom;
    out.radius_lower.lhs = a * dist / (8.0 * az2 * m);
    out.radius_lower.rhs = gap;
    out.radius_upper.lhs = gap;
    out.radius_upper.rhs = 16.0 * a * dist / (az2 * m);
    for (Ineq* q : {&out.image_gap, &out.re_lower, &out.re_upper, &out.radius_lower,
                    &out.radius_upper}) {
        q->holds = q->lhs <= q->rhs;
    }
    return out;
}

double blaschke_power_sum(const std::vector<DiskZero>& zeros, double e1, double e2,
                          double e3) {
    if (!(e1 >= 0.0) || !(e2 >= 0.0) || !(e3 >= 0.0)) {
        throw std::invalid_argument("blaschke_power_sum: exponents must be >= 0");
    }
    double total = 0.0;
    for (const auto& zero : zeros) {
        const double mod = std::abs(zero.w);
        if (!(mod < 1.0)) {
            throw std::invalid_argument("blaschke_power_sum: requires |w| < 1");
        }
        if (zero.order < 1) {
            throw std::invalid_argument("blaschke_power_sum: order must be >= 1");
        }
        const double lt = pow_log(1.0 - mod, e1) + pow_log(std::abs(1.0 - zero.w), e2) +
                          pow_log(std::abs(1.0 + zero.w), e3);
        total += zero.order * std::exp(lt);
    }
    return total;
}

LTReport regime_split_sums(const LTParams& lt, const EigenvalueList& evs,
                           const LTConstants& consts) {
    const SpectralParams& pp = evs.params();
    const double g = pp.gamma_p;
    const double small_denom = lt.delta1 + lt.delta2;
    const double large_denom =
        2.0 * lt.delta1 + 2.0 * lt.delta2 + lt.delta3 + lt.r + lt.tau;

    LTReport rep;
    rep.split_threshold = lt.eta;
    for (const auto& e : evs.entries()) {
        const double dist = dist_to_sigma_p(pp, e.lambda);
        if (dist < kDistFloor) continue;
        const double mod2 = std::abs(e.lambda - Complex(pp.vertex, 0.0));
        const double m = std::sqrt(mod2);
        const bool small = m <= lt.eta;
        const double denom_exp = small ? small_denom : large_denom;
        const double lg = lt.delta1 * std::log(dist) + pow_log(mod2, lt.delta2) -
                          denom_exp * std::log(m + 2.0 * g);
        const double term = e.mult * std::exp(lg);
        if (small) {
            rep.small_sum += term;
            rep.small_count += e.mult;
        } else {
            rep.large_sum += term;
            rep.large_count += e.mult;
        }
    }

    const double inv_ab = 1.0 / (lt.alpha + lt.beta);
    const double scale = std::pow(lt.c1, inv_ab) + g;
    const double log_small =
        (lt.r + (lt.delta1 + lt.delta2 + lt.delta3) * inv_ab) * std::log(lt.c1) +
        lt.r * std::log(scale);
    const double log_large = lt.r * std::log(lt.c1) - lt.tau * std::log(scale);
    finish_report(rep, consts, log_small, log_large);

    rep.exponents = {{"alpha", lt.alpha},   {"beta", lt.beta},
                     {"gamma", lt.gamma},   {"r", lt.r},
                     {"tau", lt.tau},       {"delta1", lt.delta1},
                     {"delta2", lt.delta2}, {"delta3", lt.delta3},
                     {"delta4", lt.delta4}, {"eta", lt.eta},
                     {"small_denom_exp", small_denom},
                     {"large_denom_exp", large_denom}};
    return rep;
}

LTReport l2_eigenvalue_sums(double r, double tau, double v_norm,
                            const EigenvalueList& evs, const LTConstants& consts) {
    if (!(r >= 2.0)) {
        throw std::invalid_argument("l2_eigenvalue_sums: requires r >= 2");
    }
    if (!(tau > 0.0) || !(tau < 1.0)) {
        throw std::invalid_argument("l2_eigenvalue_sums: requires tau in (0,1)");
    }
    if (!(v_norm >= 0.0)) {
        throw std::invalid_argument("l2_eigenvalue_sums: requires v_norm >= 0");
    }
    const SpectralParams& pp = evs.params();
    if (std::abs(pp.p - 2.0) > 1e-12) {
        throw std::invalid_argument("l2_eigenvalue_sums: eigenvalue list must be p = 2");
    }

    const double inv_ab = r / (2.0 * r - 3.0);
    const bool ratio_branch = r <= 3.0 - tau;
    const double thr = v_norm > 0.0 ? std::pow(2.0 * v_norm, inv_ab) : 0.0;

    LTReport rep;
    rep.split_threshold = thr;
    for (const auto& e : evs.entries()) {
        const double dist = dist_to_sigma_p(pp, e.lambda);
        if (dist < kDistFloor) continue;
        const double m = std::sqrt(std::abs(0.25 - e.lambda));
        const double log_dist = std::log(dist);
        const double log_m = std::log(m);
        if (m <= thr) {
            const double lg = ratio_branch ? (r + tau) * (log_dist - log_m)
                                           : (r + tau) * log_dist - 3.0 * log_m;
            rep.small_sum += e.mult * std::exp(lg);
            rep.small_count += e.mult;
        } else {
            const double lg = (r + tau) * log_dist - (3.0 + 3.0 * tau) * log_m;
            rep.large_sum += e.mult * std::exp(lg);
            rep.large_count += e.mult;
        }
    }

    const double small_exp = inv_ab * (ratio_branch ? r + tau : 2.0 * r - 3.0 + 2.0 * tau);
    const double large_exp = inv_ab * (2.0 * r - 3.0 - tau);
    finish_report(rep, consts, pow_log(v_norm, small_exp), pow_log(v_norm, large_exp));

    rep.exponents = {{"r", r},
                     {"tau", tau},
                     {"delta1", r + tau},
                     {"delta2", std::max(r - 3.0 + tau, 0.0)},
                     {"delta3", 3.0 - 3.0 * r},
                     {"inv_alpha_beta", inv_ab},
                     {"branch", ratio_branch ? 1.0 : 2.0},
                     {"small_budget_exp", small_exp},
                     {"large_budget_exp", large_exp}};
    return rep;
}

LTReport lp_eigenvalue_sums(double p, double r, double tau, double eps0,
                            double v_norm, const EigenvalueList& evs,
                            const LTConstants& consts) {
    if (!(tau > 0.0) || !(tau < 1.0)) {
        throw std::invalid_argument("lp_eigenvalue_sums: requires tau in (0,1)");
    }
    if (!(eps0 > 0.0)) {
        throw std::invalid_argument("lp_eigenvalue_sums: requires eps0 > 0");
    }
    if (!(v_norm >= 0.0)) {
        throw std::invalid_argument("lp_eigenvalue_sums: requires v_norm >= 0");
    }
    const SpectralParams pin(p);
    const double q = std::max(pin.p, pin.p_conj);
    if (!(q > 2.0)) {
        throw std::invalid_argument("lp_eigenvalue_sums: requires p != 2");
    }
    if (!(r >= q)) {
        throw std::invalid_argument("lp_eigenvalue_sums: requires r >= max(p, p')");
    }
    const SpectralParams& pp = evs.params();
    if (std::abs(pp.vertex - pin.vertex) > 1e-12) {
        throw std::invalid_argument(
            "lp_eigenvalue_sums: eigenvalue list was built for a different region");
    }

    const double g = pin.gamma_p;
    const double k = r * (1.0 + 2.0 / q) - 2.0;
    double eps_r = std::abs(r - q) < 1e-12
                       ? 0.0
                       : std::min({eps0, tau / 8.0, tau / (8.0 * (1.0 + 2.0 / q))});
    double eps1, eps2, eps3;
    for (int iter = 0;; ++iter) {
        eps1 = tau + eps_r * (1.0 + 2.0 / q - 3.0 / r);
        eps2 = 2.0 * tau + eps_r * (2.0 / q - 3.0 / r);
        eps3 = 3.0 * tau + eps_r * (2.0 / q - 3.0 / r);
        const bool ok = eps1 > 0.0 && eps1 < 4.0 * tau && eps2 > 0.0 &&
                        eps2 < 4.0 * tau && eps3 > 0.0 && eps3 < 4.0 * tau;
        if (ok) break;
        if (iter > 200) {
            throw std::logic_error("lp_eigenvalue_sums: exponent window not attainable");
        }
        eps_r *= 0.5;
    }

    const double thr = v_norm > 0.0 ? std::pow(2.0 * v_norm, r / (k - 1.0)) : 0.0;

    LTReport rep;
    rep.split_threshold = thr;
    for (const auto& e : evs.entries()) {
        const double dist = dist_to_sigma_p(pp, e.lambda);
        if (dist < kDistFloor) continue;
        const double m = std::sqrt(std::abs(e.lambda - Complex(pin.vertex, 0.0)));
        if (m <= thr) {
            rep.small_sum += e.mult * std::exp((k + eps1) * std::log(dist));
            rep.small_count += e.mult;
        } else {
            const double lg = (k + eps1) * std::log(dist) -
                              (k + 1.0 + eps3) * std::log(m + 2.0 * g);
            rep.large_sum += e.mult * std::exp(lg);
            rep.large_count += e.mult;
        }
    }

    const double scale = (v_norm > 0.0 ? std::pow(v_norm, r / (k - 1.0)) : 0.0) + g;
    const double log_small =
        pow_log(v_norm, r) + (k + 1.0 + eps2) * std::log(scale);
    const double log_large = pow_log(v_norm, r) - tau * std::log(scale);
    finish_report(rep, consts, log_small, log_large);

    rep.exponents = {{"p", q},     {"r", r},       {"tau", tau},
                     {"k", k},     {"eps_r", eps_r}, {"eps1", eps1},
                     {"eps2", eps2}, {"eps3", eps3}, {"gamma_p", g}};
    return rep;
}

}  // namespace hypspec
