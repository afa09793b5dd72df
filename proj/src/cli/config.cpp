#include "hardedge/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hardedge/core/errors.hpp"
#include "hardedge/core/types.hpp"
#include "hardedge/equilibrium/bessel.hpp"

namespace hardedge {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(IntertwiningConfig, x, t, etas, n, dt, n_perm, alpha,
                                   negative_control, control_eta_a, control_eta_b, sanity_n,
                                   integrator)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(UniformApproxConfig, k, ns, scale, ratio, bump_center,
                                   bump_halfwidth, bump_amplitude, n, truncation_eps, threshold,
                                   slack_sigmas)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EquilibriumConfig, n_particles, eta, x0, stationary_start,
                                   t_grid, n, dt, n_perm, alpha, log_coordinates, sanity_n,
                                   integrator)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CouplingConfig, omega_xs, omega_gamma, ns, horizon, dt, eta,
                                   filler_scale, filler_power, paths, slack, integrator)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CollisionConfig, ns, top, ratio, delta, eps, t, n, eta, dt,
                                   integrator)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(HardEdgeConfig, n_particles, eta, n, top, bin_lo, bin_hi,
                                   bins, min_count, tolerance, scale, alt_scale)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MatrixEigenConfig, x0, eta, t, n, dt, alpha,
                                   negative_control, control_eta, sanity_n)

namespace cli {

namespace {

const std::vector<std::string> kReserved{"seed", "threads", "out", "experiment"};

/// Keys that must be strictly positive wherever they appear.
const std::vector<std::string> kPositive{"n",     "dt",    "t",        "horizon",     "n_perm",
                                         "bins",  "paths", "scale",    "n_particles", "k",
                                         "top",   "delta", "eps",      "alt_scale",   "alpha",
                                         "slack", "bump_halfwidth"};

/// Keys holding a decreasing nonnegative configuration.
const std::vector<std::string> kConfigs{"x", "x0", "omega_xs"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

std::string locate(const std::string& origin, const std::string& text, const std::string& key) {
  if (!text.empty()) {
    const auto pos = text.find("\"" + key + "\"");
    if (pos != std::string::npos) {
      const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n');
      return origin + ":" + std::to_string(line);
    }
  }
  return origin;
}

bool same_kind(const json& def, const json& val) {
  if (def.is_null()) return true;
  if (def.is_number()) return val.is_number();
  if (def.is_boolean()) return val.is_boolean();
  if (def.is_string()) return val.is_string();
  if (def.is_array()) return val.is_array();
  if (def.is_object()) return val.is_object();
  return false;
}

const char* kind_name(const json& def) {
  if (def.is_number()) return "a number";
  if (def.is_boolean()) return "a boolean";
  if (def.is_string()) return "a string";
  if (def.is_array()) return "an array";
  return "an object";
}

/// Recursive strict merge of `user` into `base`.
void merge(json& base, const json& user, const std::string& path, const std::string& origin,
           const std::string& text) {
  for (auto it = user.begin(); it != user.end(); ++it) {
    const std::string key = it.key();
    const std::string full = path.empty() ? key : path + "." + key;
    if (!base.contains(key))
      throw ConfigError(locate(origin, text, key) + ": unknown key '" + full + "'");
    json& slot = base[key];
    const json& val = it.value();
    if (!same_kind(slot, val))
      throw ConfigError(locate(origin, text, key) + ": key '" + full + "' must be " +
                        kind_name(slot));
    if (slot.is_number_unsigned() || (slot.is_number_integer() && !slot.is_number_float())) {
      const double d = val.get<double>();
      if (d != std::floor(d) || (slot.is_number_unsigned() && d < 0))
        throw ConfigError(locate(origin, text, key) + ": key '" + full + "' must be " +
                          (slot.is_number_unsigned() ? "a nonnegative integer" : "an integer"));
      if (slot.is_number_unsigned())
        slot = static_cast<std::uint64_t>(d);
      else
        slot = static_cast<std::int64_t>(d);
      continue;
    }
    if (slot.is_object()) {
      merge(slot, val, full, origin, text);
      continue;
    }
    slot = val;
  }
}

void check_ranges(const json& params, const std::string& origin, const std::string& text) {
  for (auto it = params.begin(); it != params.end(); ++it) {
    const std::string& key = it.key();
    const json& v = it.value();
    const auto where = [&] { return locate(origin, text, key); };
    if (v.is_null()) throw ConfigError(where() + ": missing required key '" + key + "'");
    if (contains(kPositive, key) && v.is_number() && !(v.get<double>() > 0.0))
      throw ConfigError(where() + ": key '" + key + "' must be positive");
    if (key == "eta" && v.is_number() && !(v.get<double>() > -1.0))
      throw ConfigError(where() + ": key 'eta' must exceed -1");
    if (key == "integrator") {
      try {
        parse_integrator(v.get<std::string>());
      } catch (const ParameterError& e) {
        throw ConfigError(where() + ": " + e.what());
      }
    }
    if (contains(kConfigs, key) || key == "grid") {
      std::vector<double> xs;
      try {
        xs = v.get<std::vector<double>>();
      } catch (const json::exception&) {
        throw ConfigError(where() + ": key '" + key + "' must be an array of numbers");
      }
      if (xs.empty()) throw ConfigError(where() + ": key '" + key + "' must not be empty");
      if (key == "grid") {
        for (std::size_t i = 0; i < xs.size(); ++i)
          if (!(xs[i] > 0.0) || (i > 0 && !(xs[i] > xs[i - 1])))
            throw ConfigError(where() + ": grid must be positive and increasing");
        continue;
      }
      try {
        OrderedConfig checked(xs);
      } catch (const DomainError& e) {
        throw ConfigError(where() + ": key '" + key + "': " + e.what());
      }
    }
    if ((key == "ns" || key == "etas" || key == "t_grid") && v.is_array() && v.empty())
      throw ConfigError(where() + ": key '" + key + "' must not be empty");
  }
}

template <class T>
T convert(const json& p) {
  try {
    return p.get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid parameter document: ") + e.what());
  }
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"intertwining", "uniform-approx", "equilibrium",
                                              "coupling",     "collision",      "hard-edge",
                                              "matrix-eigen"};
  return names;
}

json RunConfig::echo() const {
  json j = params;
  j["seed"] = seed;
  if (!experiment.empty()) j["experiment"] = experiment;
  j["command"] = command;
  return j;
}

json default_params(const std::string& command, const std::string& experiment) {
  if (command == "simulate")
    return json{{"x0", nullptr},        {"horizon", nullptr},
                {"eta", 0.0},           {"rescaled", false},
                {"dt", 1e-3},           {"gap_safety", 0.1},
                {"positivity_floor", 1e-300},
                {"save_every", 0.01},   {"save_times", json::array()},
                {"integrator", "eigen"}};
  if (command == "sample-kernel")
    return json{{"x", nullptr}, {"k", std::uint64_t{1}}, {"n", std::uint64_t{1000}},
                {"route", "direct"}};
  if (command == "sample-equilibrium")
    return json{{"n_particles", std::uint64_t{3}},
                {"eta", 0.5},
                {"n", std::uint64_t{1000}},
                {"inverse", true}};
  if (command == "kernel-table")
    return json{{"eta", 1.0}, {"grid", nullptr}, {"scale", kInverseBesselScale}};
  if (command == "experiment") {
    if (experiment == "intertwining") return json(IntertwiningConfig{});
    if (experiment == "uniform-approx") return json(UniformApproxConfig{});
    if (experiment == "equilibrium") return json(EquilibriumConfig{});
    if (experiment == "coupling") return json(CouplingConfig{});
    if (experiment == "collision") return json(CollisionConfig{});
    if (experiment == "hard-edge") return json(HardEdgeConfig{});
    if (experiment == "matrix-eigen") return json(MatrixEigenConfig{});
    std::string known;
    for (const auto& n : experiment_names()) known += (known.empty() ? "" : ", ") + n;
    throw ConfigError("unknown experiment '" + experiment + "' (expected one of " + known + ")");
  }
  throw ConfigError("unknown command '" + command + "'");
}

json parse_document(const std::string& text, const std::string& origin) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw ConfigError(origin + ":1:1: top level must be an object");
    return doc;
  } catch (const json::parse_error& e) {
    const std::size_t end = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) +
                      ": malformed JSON");
  }
}

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ConfigError("--set expects key=value, got '" + assignment + "'");
  const std::string path = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);
  json value;
  try {
    value = json::parse(raw);
  } catch (const json::parse_error&) {
    value = raw;
  }
  json* node = &doc;
  std::stringstream ss(path);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, '.')) {
    if (part.empty()) throw ConfigError("--set: empty key component in '" + path + "'");
    parts.push_back(part);
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool last = i + 1 == parts.size();
    const std::string& p = parts[i];
    if (node->is_array()) {
      char* endp = nullptr;
      const unsigned long idx = std::strtoul(p.c_str(), &endp, 10);
      if (*endp != '\0' || idx >= node->size())
        throw ConfigError("--set: bad array index '" + p + "' in '" + path + "'");
      node = &(*node)[idx];
    } else {
      if (!node->is_object()) throw ConfigError("--set: '" + path + "' descends into a scalar");
      node = &(*node)[p];
    }
    if (last) *node = value;
  }
}

std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("HARDEDGE_SEED");
  if (s == nullptr || *s == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0' || *s == '-') throw ConfigError("HARDEDGE_SEED must be an unsigned integer");
  return static_cast<std::uint64_t>(v);
}

RunConfig resolve(const std::string& command, std::string experiment, json doc,
                  const FlagOverrides& flags, const std::string& origin,
                  const std::string& source_text) {
  if (!doc.is_object()) throw ConfigError(origin + ": top level must be an object");
  RunConfig rc;
  rc.command = command;
  if (doc.contains("experiment")) {
    if (command != "experiment")
      throw ConfigError(locate(origin, source_text, "experiment") +
                        ": key 'experiment' only applies to the experiment command");
    const auto named = doc["experiment"].get<std::string>();
    if (!experiment.empty() && experiment != named)
      throw ConfigError(locate(origin, source_text, "experiment") + ": document names '" +
                        named + "' but the command line names '" + experiment + "'");
    experiment = named;
  }
  if (command == "experiment" && experiment.empty())
    throw ConfigError("experiment: missing experiment name");
  rc.experiment = experiment;

  std::optional<std::uint64_t> doc_seed;
  if (doc.contains("seed")) {
    const json& s = doc["seed"];
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0))
      throw ConfigError(locate(origin, source_text, "seed") +
                        ": key 'seed' must be a nonnegative integer");
    doc_seed = s.get<std::uint64_t>();
  }
  std::optional<int> doc_threads;
  if (doc.contains("threads")) {
    if (!doc["threads"].is_number_integer())
      throw ConfigError(locate(origin, source_text, "threads") + ": key 'threads' must be an integer");
    doc_threads = doc["threads"].get<int>();
  }
  std::optional<std::string> doc_out;
  if (doc.contains("out")) {
    if (!doc["out"].is_string())
      throw ConfigError(locate(origin, source_text, "out") + ": key 'out' must be a string");
    doc_out = doc["out"].get<std::string>();
  }
  for (const auto& k : kReserved) doc.erase(k);

  json params = default_params(command, experiment);
  merge(params, doc, "", origin, source_text);
  check_ranges(params, origin, source_text);
  rc.params = std::move(params);

  if (flags.seed)
    rc.seed = *flags.seed;
  else if (doc_seed)
    rc.seed = *doc_seed;
  else
    rc.seed = env_seed().value_or(0);
  rc.threads = flags.threads ? *flags.threads : doc_threads.value_or(0);
  rc.out = flags.out ? *flags.out : doc_out.value_or(".");
  return rc;
}

IntertwiningConfig to_intertwining(const json& p) { return convert<IntertwiningConfig>(p); }
UniformApproxConfig to_uniform_approx(const json& p) { return convert<UniformApproxConfig>(p); }
EquilibriumConfig to_equilibrium(const json& p) { return convert<EquilibriumConfig>(p); }
CouplingConfig to_coupling(const json& p) { return convert<CouplingConfig>(p); }
CollisionConfig to_collision(const json& p) { return convert<CollisionConfig>(p); }
HardEdgeConfig to_hard_edge(const json& p) { return convert<HardEdgeConfig>(p); }
MatrixEigenConfig to_matrix_eigen(const json& p) { return convert<MatrixEigenConfig>(p); }

}  // namespace cli
}  // namespace hardedge
