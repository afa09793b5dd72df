#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hardedge/cli/config.hpp"
#include "hardedge/experiments/report.hpp"

namespace hardedge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailed = 2;

/// Runs one named experiment from a resolved parameter document.
ExperimentReport run_experiment(const std::string& name, const json& params, std::uint64_t seed);

/// Executes a resolved configuration, writing artifacts under rc.out.
/// Returns kExitOk, or kExitFailed when an experiment verdict fails.
int execute(const RunConfig& rc, std::ostream& log);

/// Loads `config_path` (may be empty), applies the overrides and executes.
/// Library errors are reported on `err` and mapped to exit codes.
int run(const std::string& command, const std::string& experiment, const std::string& config_path,
        const std::vector<std::string>& overrides, const FlagOverrides& flags, std::ostream& log,
        std::ostream& err);

/// Command-line entry point.
int main(int argc, char** argv);

}  // namespace hardedge::cli
