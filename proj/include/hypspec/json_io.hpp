#pragma once

#include <string>

#include <json.hpp>

#include "hypspec/bound_calculus.hpp"
#include "hypspec/lieb_thirring.hpp"
#include "hypspec/potential.hpp"
#include "hypspec/verify.hpp"

namespace hypspec::json_io {

nlohmann::json potential_to_json(const RadialPotential& pot);
RadialPotential potential_from_json(const nlohmann::json& j);
RadialPotential load_potential(const std::string& path);

nlohmann::json eigenvalues_to_json(const EigenvalueList& evs);
EigenvalueList eigenvalues_from_json(const nlohmann::json& j,
                                     const SpectralParams& params);
EigenvalueList load_eigenvalues(const std::string& path, const SpectralParams& params);

nlohmann::json report_to_json(const LTReport& rep);
nlohmann::json suite_to_json(const SuiteReport& rep);
nlohmann::json verdict_to_json(const EnclosureVerdict& verdict);
nlohmann::json mask_to_json(const EnclosureMask& mask);

// Serialization with every float printed via %.17g; objects keep the
// library's sorted key order.
std::string dump_17(const nlohmann::json& j);

std::string load_text(const std::string& path);
void save_text(const std::string& path, const std::string& content);

}  // namespace hypspec::json_io
