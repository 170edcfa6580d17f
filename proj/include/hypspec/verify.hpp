#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hypspec {

// Aggregated outcome of one named inequality over all drawn samples.
// worst_margin is the smallest normalized slack seen; negative means a
// violation beyond tolerance.
struct CheckResult {
    std::string name;
    long samples = 0;
    long violations = 0;
    double worst_margin = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    long samples = 0;
    bool passed = true;
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;
};

const std::vector<std::string>& suite_names();

// Runs one of the seeded property suites: "distortion" (spectral-distance
// two-sided bounds), "kernel-norms" (measured kernel norms against their
// closed-form budgets), "exclusion-chain" (certificate derivation chains),
// "transplant" (disk transplant inequalities), "duality" (p <-> p'
// invariance).  samples = 0 yields a vacuous pass with a warning.
SuiteReport run_suite(const std::string& suite, long samples, std::uint64_t seed);

}  // namespace hypspec
