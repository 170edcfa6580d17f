#include "hypspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hypspec/bound_calculus.hpp"
#include "hypspec/green_kernel.hpp"
#include "hypspec/lieb_thirring.hpp"
#include "hypspec/rng.hpp"
#include "hypspec/spectral_regions.hpp"

namespace hypspec {

namespace {

constexpr double kIneqTol = 1e-9;

class Accum {
  public:
    explicit Accum(std::string name) {
        res_.name = std::move(name);
        res_.worst_margin = std::numeric_limits<double>::infinity();
    }

    // margin is normalized slack; below -kIneqTol counts as a violation.
    void record(double margin) {
        ++res_.samples;
        if (margin < -kIneqTol) ++res_.violations;
        res_.worst_margin = std::min(res_.worst_margin, margin);
    }

    CheckResult finish() const {
        CheckResult out = res_;
        if (out.samples == 0) out.worst_margin = 0.0;
        return out;
    }

  private:
    CheckResult res_;
};

double slack(double lhs, double rhs) {
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return (rhs - lhs) / scale;
}

double rel_gap(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

Complex sample_half_plane(SampleRng& rng, double re_lo, double re_hi, double im_lo,
                          double im_hi) {
    const double x = rng.log_uniform(re_lo, re_hi);
    const double y = rng.log_uniform(im_lo, im_hi);
    return {x, rng.uniform() < 0.5 ? -y : y};
}

Complex sample_disk(SampleRng& rng) {
    const double radius = std::sqrt(rng.uniform()) * (1.0 - 1e-9);
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

SuiteReport suite_distortion(long samples, std::uint64_t seed) {
    SuiteReport rep;
    const double p_list[] = {1.2, 1.5, 2.0, 3.0, 4.0, 10.0};
    for (double p : p_list) {
        SampleRng rng(seed ^ static_cast<std::uint64_t>(p * 1000.0));
        const SpectralParams pp(p);
        char name[48];
        std::snprintf(name, sizeof(name), "distortion p=%g", p);
        Accum acc(name);
        for (long i = 0; i < samples; ++i) {
            const Complex z = sample_half_plane(rng, 1e-3, 50.0, 1e-4, 50.0);
            const double dist = dist_to_sigma_p(pp, psi_p(pp, z));
            double lower, upper;
            if (p == 2.0) {
                lower = std::abs(z) * z.real();
                upper = 2.0 * z.real() * std::abs(z);
            } else {
                const double core = std::abs(z + pp.gamma_p) * z.real();
                lower = core / 4.0;
                upper = 16.0 * core;
            }
            acc.record(std::min(slack(lower, dist), slack(dist, upper)));
        }
        rep.checks.push_back(acc.finish());
    }
    return rep;
}

SuiteReport suite_kernel_norms(long samples, std::uint64_t seed) {
    SuiteReport rep;
    SampleRng rng(seed);
    Accum l1_bound("l1-bound");
    Accum l1_identity("l1-identity-real");
    Accum l2_chain("l2-le-elstrodt");
    Accum elstrodt_chain("elstrodt-le-closed-form");
    const double lp_list[] = {1.0, 1.25, 1.5, 1.75};
    std::vector<Accum> lp_checks;
    for (double p : lp_list) {
        char name[48];
        std::snprintf(name, sizeof(name), "lp-le-interpolated p=%g", p);
        lp_checks.emplace_back(name);
    }
    const QuadratureConfig cfg;

    for (long i = 0; i < samples; ++i) {
        const bool real_case = i % 2 == 0;
        const double x = rng.log_uniform(0.1, 5.0);
        const double y = rng.log_uniform(1e-2, 5.0);
        const Complex z(x, real_case ? 0.0 : (rng.uniform() < 0.5 ? -y : y));

        {
            const SpectralParams p1(1.0);
            const SpectralPoint pt{psi_p(p1, z), z, z + 0.5 + p1.gamma_p};
            const double measured = measured_lp_norm(pt, 1.0, cfg);
            const double exact = l1_norm_exact(z);
            l1_bound.record(slack(measured, exact) + 1e-6);
            if (real_case) l1_identity.record(1e-6 - rel_gap(measured, exact));
        }
        {
            const SpectralParams p2(2.0);
            const SpectralPoint pt{psi_p(p2, z), z, z + 0.5};
            const double measured = measured_lp_norm(pt, 2.0, cfg);
            const double mid = elstrodt_bound(pt);
            const double closed = l2_norm_bound(pt);
            l2_chain.record(slack(measured * measured, mid) + 1e-6);
            elstrodt_chain.record(slack(mid, closed));
        }
        for (std::size_t k = 0; k < std::size(lp_list); ++k) {
            const double p = lp_list[k];
            const SpectralParams pk(p);
            const SpectralPoint pt{psi_p(pk, z), z, z + 0.5 + pk.gamma_p};
            const double measured = measured_lp_norm(pt, p, cfg);
            lp_checks[k].record(slack(measured, lp_norm_bound(p, z)) + 1e-6);
        }
    }
    rep.checks.push_back(l1_bound.finish());
    rep.checks.push_back(l1_identity.finish());
    rep.checks.push_back(l2_chain.finish());
    rep.checks.push_back(elstrodt_chain.finish());
    for (auto& a : lp_checks) rep.checks.push_back(a.finish());
    return rep;
}

SuiteReport suite_exclusion_chain(long samples, std::uint64_t seed) {
    SuiteReport rep;
    {
        SampleRng rng(seed);
        const SpectralParams p2(2.0);
        Accum acc("l2-chain");
        for (long i = 0; i < samples; ++i) {
            const Complex z = sample_half_plane(rng, 1e-2, 10.0, 1e-3, 10.0);
            const double r = rng.uniform(2.0, 8.0);
            const Complex lambda = psi_p(p2, z);
            const double dist = dist_to_sigma_p(p2, lambda);
            const double m = std::sqrt(std::abs(0.25 - lambda));
            const double lhs = (r - 2.0) * std::log(dist) +
                               std::log(std::abs(z + 0.5)) + std::log(z.real());
            const double rhs = (r - 1.0) * std::log(dist) +
                               std::log1p(1.0 / (2.0 * m)) - 1.5 * std::numbers::ln2;
            acc.record((lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
        rep.checks.push_back(acc.finish());
    }
    const double p_list[] = {1.2, 1.5, 3.0, 4.0, 10.0};
    for (double p : p_list) {
        SampleRng rng(seed ^ static_cast<std::uint64_t>(p * 977.0));
        const SpectralParams pp(p);
        const double q = std::max(pp.p, pp.p_conj);
        char name[48];
        std::snprintf(name, sizeof(name), "lp-chain p=%g", p);
        Accum acc(name);
        for (long i = 0; i < samples; ++i) {
            const Complex z = sample_half_plane(rng, 1e-2, 10.0, 1e-3, 10.0);
            const double r = q + rng.uniform(0.0, 4.0);
            const Complex lambda = psi_p(pp, z);
            const double dist = dist_to_sigma_p(pp, lambda);
            const double m = std::sqrt(std::abs(0.25 - lambda));
            const double expo = r * (1.0 - 2.0 / q) + 1.0;
            const double lhs = (2.0 * r - 2.0) * std::log(z.real()) +
                               expo * std::log1p(1.0 / (2.0 * z.real()));
            const double rhs =
                (2.0 * r - 2.0) * (std::log(dist) - std::log(16.0 * m)) +
                expo * std::log1p(m / (8.0 * dist));
            acc.record((lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
        rep.checks.push_back(acc.finish());
    }
    return rep;
}

SuiteReport suite_transplant(long samples, std::uint64_t seed) {
    SuiteReport rep;
    SampleRng rng(seed);
    const double p_list[] = {1.2, 1.5, 2.0, 3.0, 4.0, 10.0};
    Accum image_gap("image-gap");
    Accum re_lower("re-lower");
    Accum re_upper("re-upper");
    Accum radius_lower("radius-lower");
    Accum radius_upper("radius-upper");
    for (long i = 0; i < samples; ++i) {
        const SpectralParams pp(p_list[i % std::size(p_list)]);
        const double a = rng.log_uniform(1e-2, 1e2);
        const Complex w = sample_disk(rng);
        const TransplantBounds tb = disk_transplant_bounds(pp, a, w);
        image_gap.record(slack(tb.image_gap.lhs, tb.image_gap.rhs));
        re_lower.record(slack(tb.re_lower.lhs, tb.re_lower.rhs));
        re_upper.record(slack(tb.re_upper.lhs, tb.re_upper.rhs));
        radius_lower.record(slack(tb.radius_lower.lhs, tb.radius_lower.rhs));
        radius_upper.record(slack(tb.radius_upper.lhs, tb.radius_upper.rhs));
    }
    rep.checks.push_back(image_gap.finish());
    rep.checks.push_back(re_lower.finish());
    rep.checks.push_back(re_upper.finish());
    rep.checks.push_back(radius_lower.finish());
    rep.checks.push_back(radius_upper.finish());
    return rep;
}

SuiteReport suite_duality(long samples, std::uint64_t seed) {
    SuiteReport rep;
    SampleRng rng(seed);
    Accum membership("region-membership");
    Accum distance("region-distance");
    Accum resolvent("resolvent-bound");
    Accum certificate("certificate");
    Accum sums("eigenvalue-sums");

    for (long i = 0; i < samples; ++i) {
        const double p = 1.0 + rng.uniform(0.02, 0.98);
        const SpectralParams pp(p);
        const SpectralParams pc(pp.p_conj);
        const Complex lambda = rng.box(-3.0, 3.0, -3.0, 3.0);

        membership.record(sigma_p_contains(pp, lambda) == sigma_p_contains(pc, lambda)
                              ? 1.0
                              : -1.0);
        const double d1 = dist_to_sigma_p(pp, lambda);
        const double d2 = dist_to_sigma_p(pc, lambda);
        distance.record(1e-12 - std::abs(d1 - d2) / std::max({d1, d2, 1e-300}));

        const Complex z = sample_half_plane(rng, 1e-2, 10.0, 1e-3, 10.0);
        const double rb1 = resolvent_norm_bound(pp, z);
        const double rb2 = resolvent_norm_bound(pc, z);
        resolvent.record(1e-12 - rel_gap(rb1, rb2));

        if (d1 > 1e-6) {
            PotentialSpec pot;
            pot.r = std::max(pp.p, pp.p_conj) + rng.uniform(0.5, 3.0);
            pot.v_norm = rng.log_uniform(0.1, 10.0);
            const EnclosureVerdict v1 = lp_exclusion_certificate(pp, pot, lambda);
            const EnclosureVerdict v2 = lp_exclusion_certificate(pc, pot, lambda);
            const double diff =
                std::max(std::abs(v1.log_lhs - v2.log_lhs),
                         std::abs(v1.log_rhs - v2.log_rhs)) /
                std::max({std::abs(v1.log_lhs), std::abs(v1.log_rhs), 1.0});
            certificate.record(1e-12 - diff);
        }

        std::vector<Eigenvalue> entries;
        for (int k = 0; k < 3 && static_cast<long>(entries.size()) < 3; ++k) {
            const Complex cand = rng.box(-3.0, 1.0, -2.0, 2.0);
            if (dist_to_sigma_p(pp, cand) > 1e-3) entries.push_back({cand, 1 + k % 2});
        }
        if (!entries.empty()) {
            const EigenvalueList evs(pp, entries);
            const double r = std::max(pp.p, pp.p_conj) + rng.uniform(0.5, 3.0);
            const double tau = rng.uniform(0.1, 0.9);
            const double vn = rng.log_uniform(0.1, 10.0);
            const LTReport a = lp_eigenvalue_sums(p, r, tau, 1e-3, vn, evs);
            const LTReport b = lp_eigenvalue_sums(pp.p_conj, r, tau, 1e-3, vn, evs);
            const double diff =
                std::max({rel_gap(a.small_sum, b.small_sum),
                          rel_gap(a.large_sum, b.large_sum),
                          rel_gap(a.small_budget, b.small_budget),
                          rel_gap(a.large_budget, b.large_budget)});
            sums.record(1e-12 - diff);
        }
    }
    rep.checks.push_back(membership.finish());
    rep.checks.push_back(distance.finish());
    rep.checks.push_back(resolvent.finish());
    rep.checks.push_back(certificate.finish());
    rep.checks.push_back(sums.finish());
    return rep;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "distortion", "kernel-norms", "exclusion-chain", "transplant", "duality"};
    return names;
}

SuiteReport run_suite(const std::string& suite, long samples, std::uint64_t seed) {
    if (samples < 0) {
        throw std::invalid_argument("run_suite: samples must be >= 0");
    }
    SuiteReport rep;
    if (suite == "distortion") {
        rep = suite_distortion(samples, seed);
    } else if (suite == "kernel-norms") {
        rep = suite_kernel_norms(samples, seed);
    } else if (suite == "exclusion-chain") {
        rep = suite_exclusion_chain(samples, seed);
    } else if (suite == "transplant") {
        rep = suite_transplant(samples, seed);
    } else if (suite == "duality") {
        rep = suite_duality(samples, seed);
    } else {
        std::string msg = "run_suite: unknown suite '" + suite + "'; expected one of";
        for (const auto& n : suite_names()) msg += " " + n;
        throw std::invalid_argument(msg);
    }
    rep.suite = suite;
    rep.seed = seed;
    rep.samples = samples;
    if (samples == 0) {
        rep.warnings.push_back("zero samples requested; pass is vacuous");
    }
    for (const auto& c : rep.checks) {
        if (c.violations > 0) rep.passed = false;
    }
    return rep;
}

}  // namespace hypspec
