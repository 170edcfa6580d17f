#include "hypspec/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "hypspec/bound_calculus.hpp"
#include "hypspec/bs_oracle.hpp"
#include "hypspec/green_kernel.hpp"
#include "hypspec/json_io.hpp"
#include "hypspec/lieb_thirring.hpp"
#include "hypspec/spectral_regions.hpp"
#include "hypspec/svg.hpp"
#include "hypspec/verify.hpp"

namespace hypspec::cli {

namespace {

struct Window {
    double x0, x1, y0, y1;
};

Window parse_window(const std::string& text) {
    Window w{};
    char tail = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf%c", &w.x0, &w.x1, &w.y0, &w.y1,
                    &tail) != 4) {
        throw CLI::ValidationError("--window", "expected x0,x1,y0,y1");
    }
    return w;
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
    std::filesystem::create_directories(cfg.out_dir);
    return (std::filesystem::path(cfg.out_dir) / name).string();
}

std::string fmt(double v) { return svg::format_double(v); }

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                          "#9467bd", "#ff7f0e", "#8c564b"};

int cmd_regions(const RunConfig& cfg, const std::vector<double>& p_list,
                const Window& win, int res) {
    const double width = 800.0, height = 600.0;
    const double ml = 60.0, mr = 40.0, mt = 40.0, mb = 50.0;
    auto sx = [&](double x) {
        return ml + (x - win.x0) / (win.x1 - win.x0) * (width - ml - mr);
    };
    auto sy = [&](double y) {
        return height - mb - (y - win.y0) / (win.y1 - win.y0) * (height - mt - mb);
    };

    svg::Document doc(width, height);
    svg::Style axis;
    axis.stroke = "#999999";
    axis.stroke_width = 0.8;
    if (win.y0 < 0.0 && win.y1 > 0.0) {
        doc.line(sx(win.x0), sy(0.0), sx(win.x1), sy(0.0), axis);
    }
    if (win.x0 < 0.0 && win.x1 > 0.0) {
        doc.line(sx(0.0), sy(win.y0), sx(0.0), sy(win.y1), axis);
    }

    nlohmann::json meta_curves = nlohmann::json::array();
    int color = 0;
    for (double p : p_list) {
        const SpectralParams pp(p);
        const double gamma = pp.gamma_p;
        const double vertex = pp.vertex;
        const int n = std::max(res, 3) | 1;
        const double t_max = std::sqrt(std::max(win.x1 - vertex, 1e-12));

        std::vector<std::pair<double, double>> world(n);
        std::string csv = "a,b\n";
        for (int i = 0; i < n; ++i) {
            const double t = -t_max + 2.0 * t_max * i / (n - 1);
            const double a = vertex + t * t;
            const double b = 2.0 * gamma * t;
            world[i] = {a, b};
            csv += fmt(a) + "," + fmt(b) + "\n";
        }

        char namebuf[64];
        std::snprintf(namebuf, sizeof(namebuf), "boundary_p%g.csv", p);
        json_io::save_text(out_path(cfg, namebuf), csv);

        svg::Style curve;
        curve.stroke = kPalette[color % std::size(kPalette)];
        curve.stroke_width = 1.6;
        std::vector<std::pair<double, double>> pixels(world.size());
        for (std::size_t i = 0; i < world.size(); ++i) {
            pixels[i] = {sx(world[i].first), sy(world[i].second)};
        }
        doc.polyline(pixels, curve);

        svg::Style dot;
        dot.stroke = curve.stroke;
        dot.fill = curve.stroke;
        doc.circle(sx(vertex), sy(0.0), 3.0, dot);
        char label[96];
        std::snprintf(label, sizeof(label), "p=%g vertex=%.6g", p, vertex);
        doc.text(sx(vertex) + 6.0, sy(0.0) - 6.0 - 14.0 * color, label, 12.0,
                 curve.stroke);

        meta_curves.push_back({{"p", p},
                               {"gamma", gamma},
                               {"vertex", vertex},
                               {"focal_length", gamma * gamma},
                               {"csv", namebuf}});
        ++color;
    }

    svg::Style focus;
    focus.stroke = "#000000";
    focus.fill = "#000000";
    doc.circle(sx(0.25), sy(0.0), 2.5, focus);
    doc.text(sx(0.25) + 6.0, sy(0.0) + 16.0, "focus 1/4", 12.0, "#000000");

    json_io::save_text(out_path(cfg, "regions.svg"), doc.str());
    nlohmann::json meta = {{"window", {win.x0, win.x1, win.y0, win.y1}},
                           {"res", std::max(res, 3) | 1},
                           {"curves", meta_curves}};
    json_io::save_text(out_path(cfg, "regions_meta.json"), json_io::dump_17(meta));
    std::printf("regions: wrote %zu curve(s) to %s\n", p_list.size(),
                cfg.out_dir.c_str());
    return 0;
}

int cmd_enclose(const RunConfig& cfg, double p, double r, double v_norm,
                const Window& win, int res) {
    const SpectralParams pp(p);
    if (p == 2.0) {
        if (r < 2.0) throw std::runtime_error("enclose: p = 2 requires r >= 2");
    } else if (r < std::max(pp.p, pp.p_conj) * (1.0 - 1e-12)) {
        throw std::runtime_error("enclose: requires r >= max(p, p')");
    }
    PotentialSpec pot;
    pot.r = r;
    pot.v_norm = v_norm;
    const EnclosureMask mask =
        enclosure_region(pp, pot, win.x0, win.x1, win.y0, win.y1, res, res);
    json_io::save_text(out_path(cfg, "enclosure_mask.csv"), mask_csv(mask));
    json_io::save_text(out_path(cfg, "enclosure_mask.json"),
                       json_io::dump_17(json_io::mask_to_json(mask)));

    long candidates = 0;
    for (auto c : mask.cells) candidates += c != 0;
    nlohmann::json meta = {{"p", p},
                           {"r", r},
                           {"v_norm", v_norm},
                           {"window", {win.x0, win.x1, win.y0, win.y1}},
                           {"res", res},
                           {"candidate_cells", candidates}};
    if (p == 2.0) {
        meta["dist_bound"] = std::pow(2.0, 1.5 / (r - 1.0)) *
                             std::pow(c0_constant(), 1.0 / (r - 1.0)) *
                             std::pow(v_norm, r / (r - 1.0));
    }
    json_io::save_text(out_path(cfg, "enclosure_meta.json"), json_io::dump_17(meta));
    std::printf("enclose: %ld of %d cells remain candidates\n", candidates, res * res);
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, long samples) {
    const SuiteReport rep = run_suite(suite, samples, cfg.seed);
    json_io::save_text(out_path(cfg, "verify_" + suite + ".json"),
                       json_io::dump_17(json_io::suite_to_json(rep)));
    for (const auto& w : rep.warnings) {
        std::printf("warning: %s\n", w.c_str());
    }
    for (const auto& c : rep.checks) {
        std::printf("%-28s %8ld samples %6ld violations worst margin %s\n",
                    c.name.c_str(), c.samples, c.violations, fmt(c.worst_margin).c_str());
    }
    std::printf("suite %s: %s\n", suite.c_str(), rep.passed ? "PASS" : "FAIL");
    return rep.passed ? 0 : 1;
}

int cmd_lt_check(const RunConfig& cfg, const std::string& theorem,
                 const std::string& evs_file, double p, double r, double tau,
                 double eps0, double v_norm, double c1, double alpha, double beta,
                 double gamma_exp, double c, double c_prime) {
    const LTConstants consts{c, c_prime};
    LTReport rep;
    if (theorem == "l2") {
        const SpectralParams pp(2.0);
        const EigenvalueList evs = json_io::load_eigenvalues(evs_file, pp);
        rep = l2_eigenvalue_sums(r, tau, v_norm, evs, consts);
    } else if (theorem == "lp") {
        const SpectralParams pp(p);
        const EigenvalueList evs = json_io::load_eigenvalues(evs_file, pp);
        rep = lp_eigenvalue_sums(p, r, tau, eps0, v_norm, evs, consts);
    } else if (theorem == "general") {
        const SpectralParams pp(p);
        const EigenvalueList evs = json_io::load_eigenvalues(evs_file, pp);
        const LTParams lt(alpha, beta, gamma_exp, r, tau, c1);
        rep = regime_split_sums(lt, evs, consts);
    } else {
        throw std::runtime_error("lt-check: unknown theorem '" + theorem +
                                 "'; expected l2, lp or general");
    }
    json_io::save_text(out_path(cfg, "lt_report.json"),
                       json_io::dump_17(json_io::report_to_json(rep)));
    for (const auto& [key, value] : rep.exponents) {
        std::printf("%-16s %s\n", key.c_str(), fmt(value).c_str());
    }
    std::printf("small: sum %s budget %s ratio %s (%s)\n", fmt(rep.small_sum).c_str(),
                fmt(rep.small_budget).c_str(), fmt(rep.small_ratio).c_str(),
                rep.small_satisfied ? "<=" : ">");
    std::printf("large: sum %s budget %s ratio %s (%s)\n", fmt(rep.large_sum).c_str(),
                fmt(rep.large_budget).c_str(), fmt(rep.large_ratio).c_str(),
                rep.large_satisfied ? "<=" : ">");
    return 0;
}

int cmd_oracle(const RunConfig& cfg, const std::string& pot_file, const Window& win,
               int n, int m, double r) {
    const RadialPotential pot = json_io::load_potential(pot_file);
    const SearchBox box{win.x0, win.x1, win.y0, win.y1};
    const OracleResult result = find_eigenvalues(pot, box, n, {}, m);
    for (const auto& w : result.warnings) {
        std::printf("warning: %s\n", w.c_str());
    }

    PotentialSpec spec;
    spec.r = r;
    spec.v_norm = pot.lr_norm(r);
    spec.profile = pot;

    nlohmann::json certificates = nlohmann::json::array();
    bool all_clear = true;
    for (const auto& e : result.eigenvalues.entries()) {
        const EnclosureVerdict v = l2_exclusion_certificate(spec, e.lambda);
        certificates.push_back(json_io::verdict_to_json(v));
        if (v.excluded) all_clear = false;
        std::printf("eigenvalue re=%s im=%s mult %d: %s\n",
                    fmt(e.lambda.real()).c_str(), fmt(e.lambda.imag()).c_str(), e.mult,
                    v.excluded ? "EXCLUDED (inconsistent)" : "not excluded");
    }

    json_io::save_text(out_path(cfg, "eigenvalues.json"),
                       json_io::dump_17(json_io::eigenvalues_to_json(result.eigenvalues)));
    nlohmann::json report = {{"n", n},
                             {"angular_points", m},
                             {"r", r},
                             {"v_norm", spec.v_norm},
                             {"box", {win.x0, win.x1, win.y0, win.y1}},
                             {"eigenvalues", json_io::eigenvalues_to_json(result.eigenvalues)},
                             {"certificates", certificates},
                             {"warnings", result.warnings},
                             {"all_non_excluded", all_clear}};
    json_io::save_text(out_path(cfg, "oracle_report.json"), json_io::dump_17(report));
    std::printf("oracle: %zu eigenvalue(s), certificates %s\n",
                result.eigenvalues.entries().size(),
                all_clear ? "consistent" : "INCONSISTENT");
    return all_clear ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Spectral-region, kernel-bound and eigenvalue-sum toolbox for the "
                 "hyperbolic-plane Schrodinger operator"};
    app.require_subcommand(1);

    RunConfig cfg;

    std::vector<double> p_list{1.0, 1.5, 2.0};
    std::string window_regions = "-0.1,1.1,-0.85,0.85";
    int res_regions = 257;
    auto* regions = app.add_subcommand("regions", "Plot spectral-region boundaries");
    regions->add_option("--p", p_list, "Lebesgue exponents to draw")
        ->expected(-1);
    regions->add_option("--window", window_regions, "Plot window x0,x1,y0,y1");
    regions->add_option("--res", res_regions, "Samples per boundary curve");
    regions->add_option("--out", cfg.out_dir, "Output directory");

    double p_enc = 2.0, r_enc = 2.0, v_enc = 1.0;
    std::string window_enc = "-1,0.5,-0.75,0.75";
    int res_enc = 64;
    auto* enclose = app.add_subcommand(
        "enclose", "Rasterize the certificate-based eigenvalue enclosure");
    enclose->add_option("--p", p_enc, "Lebesgue exponent of the operator");
    enclose->add_option("--r", r_enc, "Potential-norm exponent");
    enclose->add_option("--vnorm", v_enc, "Potential norm");
    enclose->add_option("--window", window_enc, "Grid window x0,x1,y0,y1");
    enclose->add_option("--res", res_enc, "Grid resolution per axis");
    enclose->add_option("--out", cfg.out_dir, "Output directory");

    std::string suite;
    long samples = 1000;
    auto* verify = app.add_subcommand("verify", "Run a seeded inequality suite");
    verify->add_option("--suite", suite, "Suite name")->required();
    verify->add_option("--samples", samples, "Sample count");
    verify->add_option("--seed", cfg.seed, "Random seed");
    verify->add_option("--out", cfg.out_dir, "Output directory");

    std::string theorem = "l2", evs_file;
    double p_lt = 4.0, r_lt = 4.0, tau = 0.5, eps0 = 1e-3, v_lt = 1.0, c1 = 1.0;
    double alpha = 0.5, beta = 0.5, gamma_exp = 2.0, cc = 1.0, cp = 1.0;
    auto* lt = app.add_subcommand("lt-check", "Evaluate eigenvalue-sum inequalities");
    lt->add_option("--theorem", theorem, "Inequality family: l2, lp or general");
    lt->add_option("--evs", evs_file, "Eigenvalue list JSON file")->required();
    lt->add_option("--p", p_lt, "Lebesgue exponent (lp and general)");
    lt->add_option("--r", r_lt, "Potential-norm exponent");
    lt->add_option("--tau", tau, "Aperture parameter in (0,1)");
    lt->add_option("--eps0", eps0, "Cap for the auxiliary exponent shift");
    lt->add_option("--vnorm", v_lt, "Potential norm");
    lt->add_option("--c1", c1, "Abstract-engine norm constant");
    lt->add_option("--alpha", alpha, "Abstract-engine exponent alpha");
    lt->add_option("--beta", beta, "Abstract-engine exponent beta");
    lt->add_option("--gamma-exp", gamma_exp, "Abstract-engine exponent gamma");
    lt->add_option("--c", cc, "Small-regime constant");
    lt->add_option("--cprime", cp, "Large-regime constant");
    lt->add_option("--out", cfg.out_dir, "Output directory");

    std::string pot_file;
    std::string window_orc = "-1,0.249,0,0";
    int n_orc = 64, m_orc = 128;
    double r_orc = 2.0;
    auto* oracle = app.add_subcommand(
        "oracle", "Locate Birman-Schwinger eigenvalues and cross-check certificates");
    oracle->add_option("--pot", pot_file, "Radial potential JSON file")->required();
    oracle->add_option("--window", window_orc, "Search box x0,x1,y0,y1");
    oracle->add_option("--n", n_orc, "Radial quadrature points");
    oracle->add_option("--m", m_orc, "Angular average points");
    oracle->add_option("--r", r_orc, "Certificate norm exponent");
    oracle->add_option("--out", cfg.out_dir, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (regions->parsed()) {
            cfg.command = "regions";
            return cmd_regions(cfg, p_list, parse_window(window_regions), res_regions);
        }
        if (enclose->parsed()) {
            cfg.command = "enclose";
            return cmd_enclose(cfg, p_enc, r_enc, v_enc, parse_window(window_enc),
                               res_enc);
        }
        if (verify->parsed()) {
            cfg.command = "verify";
            return cmd_verify(cfg, suite, samples);
        }
        if (lt->parsed()) {
            cfg.command = "lt-check";
            return cmd_lt_check(cfg, theorem, evs_file, p_lt, r_lt, tau, eps0, v_lt,
                                c1, alpha, beta, gamma_exp, cc, cp);
        }
        if (oracle->parsed()) {
            cfg.command = "oracle";
            return cmd_oracle(cfg, pot_file, parse_window(window_orc), n_orc, m_orc,
                              r_orc);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}

}  // namespace hypspec::cli
