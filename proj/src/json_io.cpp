#include "hypspec/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hypspec::json_io {

namespace {

std::string fmt(double value) {
    if (!std::isfinite(value)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

const nlohmann::json& require(const nlohmann::json& j, const char* key,
                              const std::string& where) {
    if (!j.is_object()) {
        throw std::runtime_error(where + ": expected an object");
    }
    if (!j.contains(key)) {
        throw std::runtime_error(where + ": missing field '" + key + "'");
    }
    return j.at(key);
}

double number(const nlohmann::json& j, const char* key, const std::string& where) {
    const auto& v = require(j, key, where);
    if (!v.is_number()) {
        throw std::runtime_error(where + ": field '" + key + "' must be a number");
    }
    return v.get<double>();
}

void dump_impl(const nlohmann::json& j, std::string& out) {
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                out += nlohmann::json(key).dump();
                out += ':';
                dump_impl(value, out);
            }
            out += '}';
            break;
        }
        case nlohmann::json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& value : j) {
                if (!first) out += ',';
                first = false;
                dump_impl(value, out);
            }
            out += ']';
            break;
        }
        case nlohmann::json::value_t::number_float:
            out += fmt(j.get<double>());
            break;
        default:
            out += j.dump();
    }
}

}  // namespace

nlohmann::json potential_to_json(const RadialPotential& pot) {
    nlohmann::json grid = nlohmann::json::array();
    for (const auto& s : pot.samples()) {
        grid.push_back({{"d", s.d}, {"re", s.value.real()}, {"im", s.value.imag()}});
    }
    return {{"grid", grid}, {"support", pot.support_radius()}};
}

RadialPotential potential_from_json(const nlohmann::json& j) {
    const auto& grid = require(j, "grid", "potential");
    if (!grid.is_array() || grid.empty()) {
        throw std::runtime_error("potential: 'grid' must be a non-empty array");
    }
    std::vector<PotentialSample> samples;
    samples.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const std::string where = "potential grid[" + std::to_string(i) + "]";
        const auto& entry = grid.at(i);
        samples.push_back({number(entry, "d", where),
                           Complex(number(entry, "re", where),
                                   number(entry, "im", where))});
    }
    return RadialPotential(std::move(samples), number(j, "support", "potential"));
}

RadialPotential load_potential(const std::string& path) {
    try {
        return potential_from_json(nlohmann::json::parse(load_text(path)));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

nlohmann::json eigenvalues_to_json(const EigenvalueList& evs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : evs.entries()) {
        out.push_back({{"re", e.lambda.real()},
                       {"im", e.lambda.imag()},
                       {"mult", e.mult}});
    }
    return out;
}

EigenvalueList eigenvalues_from_json(const nlohmann::json& j,
                                     const SpectralParams& params) {
    if (!j.is_array()) {
        throw std::runtime_error("eigenvalues: expected a top-level array");
    }
    std::vector<Eigenvalue> entries;
    entries.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = "eigenvalues[" + std::to_string(i) + "]";
        const auto& entry = j.at(i);
        int mult = 1;
        if (entry.is_object() && entry.contains("mult")) {
            if (!entry.at("mult").is_number_integer()) {
                throw std::runtime_error(where + ": field 'mult' must be an integer");
            }
            mult = entry.at("mult").get<int>();
        }
        entries.push_back({Complex(number(entry, "re", where),
                                   number(entry, "im", where)),
                           mult});
    }
    return EigenvalueList(params, std::move(entries));
}

EigenvalueList load_eigenvalues(const std::string& path, const SpectralParams& params) {
    try {
        return eigenvalues_from_json(nlohmann::json::parse(load_text(path)), params);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

nlohmann::json report_to_json(const LTReport& rep) {
    return {{"small_sum", rep.small_sum},
            {"small_budget", rep.small_budget},
            {"small_ratio", rep.small_ratio},
            {"small_satisfied", rep.small_satisfied},
            {"small_count", rep.small_count},
            {"large_sum", rep.large_sum},
            {"large_budget", rep.large_budget},
            {"large_ratio", rep.large_ratio},
            {"large_satisfied", rep.large_satisfied},
            {"large_count", rep.large_count},
            {"split_threshold", rep.split_threshold},
            {"exponents", rep.exponents}};
}

nlohmann::json suite_to_json(const SuiteReport& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        checks.push_back({{"name", c.name},
                          {"samples", c.samples},
                          {"violations", c.violations},
                          {"worst_margin", c.worst_margin}});
    }
    return {{"suite", rep.suite},
            {"seed", rep.seed},
            {"samples", rep.samples},
            {"passed", rep.passed},
            {"checks", checks},
            {"warnings", rep.warnings}};
}

nlohmann::json verdict_to_json(const EnclosureVerdict& verdict) {
    return {{"lambda_re", verdict.lambda.real()},
            {"lambda_im", verdict.lambda.imag()},
            {"lhs", verdict.lhs},
            {"rhs", verdict.rhs},
            {"log_lhs", verdict.log_lhs},
            {"log_rhs", verdict.log_rhs},
            {"excluded", verdict.excluded}};
}

nlohmann::json mask_to_json(const EnclosureMask& mask) {
    nlohmann::json runs = nlohmann::json::array();
    std::size_t i = 0;
    const std::size_t total = mask.cells.size();
    while (i < total) {
        std::size_t j = i;
        while (j < total && mask.cells[j] == mask.cells[i]) ++j;
        runs.push_back(j - i);
        i = j;
    }
    return {{"x0", mask.x0}, {"x1", mask.x1}, {"y0", mask.y0},
            {"y1", mask.y1}, {"nx", mask.nx}, {"ny", mask.ny},
            {"start", total == 0 ? 0 : static_cast<int>(mask.cells[0])},
            {"runs", runs}};
}

std::string dump_17(const nlohmann::json& j) {
    std::string out;
    dump_impl(j, out);
    out += '\n';
    return out;
}

std::string load_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "' for reading");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void save_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("failed while writing '" + path + "'");
    }
}

}  // namespace hypspec::json_io
