#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hardedge/experiments/experiments.hpp"

namespace hardedge::cli {

using nlohmann::json;

/// Names accepted by `experiment <name>`.
const std::vector<std::string>& experiment_names();

/// Command-line values that take precedence over the document.
struct FlagOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::optional<std::string> out;
};

/// Fully resolved run description.
struct RunConfig {
  std::string command;
  /// Empty unless command == "experiment".
  std::string experiment;
  /// Command parameters, defaults filled in.
  json params = json::object();
  std::uint64_t seed = 0;
  std::string out = ".";
  /// <= 0 means the runtime default.
  int threads = 0;

  /// Document echoed into reports: params plus seed and experiment name.
  /// Thread count and output directory are left out so that reports do not
  /// depend on them.
  json echo() const;
};

/// Default parameter document for a command; null values mark required keys.
json default_params(const std::string& command, const std::string& experiment = "");

/// Parses a JSON document. ConfigError carries "<origin>:<line>:<col>".
json parse_document(const std::string& text, const std::string& origin = "<config>");
json load_document(const std::string& path);

/// Applies `dotted.key=value`. The value is read as JSON when it parses,
/// otherwise as a string. ConfigError on malformed input.
void apply_override(json& doc, const std::string& assignment);

/// Merges doc over the defaults, rejecting unknown keys, missing required
/// keys and type mismatches. `source_text` is searched for line numbers.
RunConfig resolve(const std::string& command, std::string experiment, json doc,
                  const FlagOverrides& flags, const std::string& origin = "<config>",
                  const std::string& source_text = "");

/// Reads HARDEDGE_SEED; ConfigError if set but not an unsigned integer.
std::optional<std::uint64_t> env_seed();

IntertwiningConfig to_intertwining(const json& p);
UniformApproxConfig to_uniform_approx(const json& p);
EquilibriumConfig to_equilibrium(const json& p);
CouplingConfig to_coupling(const json& p);
CollisionConfig to_collision(const json& p);
HardEdgeConfig to_hard_edge(const json& p);
MatrixEigenConfig to_matrix_eigen(const json& p);

}  // namespace hardedge::cli
