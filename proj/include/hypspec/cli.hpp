#pragma once

#include <cstdint>
#include <string>

namespace hypspec::cli {

// Shared command context: subcommand name, output directory and the seed
// used by the sampled suites.
struct RunConfig {
    std::string command;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
};

// Entry point for the command-line tool; returns the process exit code
// (0 success, 1 verified-inequality violation, 2 usage or I/O failure).
int run(int argc, const char* const* argv);

}  // namespace hypspec::cli
