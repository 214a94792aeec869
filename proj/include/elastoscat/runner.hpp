// Subcommand implementations behind the CLI: solve, farfield, sweep, verify,
// distances. Each writes one output file carrying the config echo in its
// header and returns a short human-readable summary for stdout.
#pragma once

#include <string>
#include <vector>

#include "elastoscat/config.hpp"

namespace elast {

struct VerifyRow {
    std::string name;
    double lhs, rhs;
    bool holds;
};

// the full inequality suite on the built-in domains and seeded families
std::vector<VerifyRow> run_verify_suite(std::uint64_t seed);

// dispatch; throws invalid_input (exit 2) or numerical_error (exit 3)
std::string run_subcommand(const std::string& name, const RunConfig& cfg);

}  // namespace elast
