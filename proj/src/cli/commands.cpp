#include "hardedge/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hardedge/cli/csv.hpp"
#include "hardedge/core/errors.hpp"
#include "hardedge/core/random.hpp"
#include "hardedge/equilibrium/laguerre.hpp"
#include "hardedge/experiments/ensemble.hpp"
#include "hardedge/kernels/corner.hpp"
#include "hardedge/sde/eigen_sde.hpp"

namespace hardedge::cli {

namespace {

constexpr std::uint64_t kTagSimulate = 0x80;
constexpr std::uint64_t kTagKernel = 0x81;
constexpr std::uint64_t kTagEquilibrium = 0x82;

namespace fs = std::filesystem;

fs::path prepare(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir + "': " + ec.message());
  return fs::path(dir);
}

void write_json(const fs::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << doc.dump(2) << "\n";
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

/// Manifest for commands that do not produce an ExperimentReport.
void write_manifest(const fs::path& dir, const RunConfig& rc, const json& outputs) {
  write_json(dir / "run.json",
             json{{"version", version_string()}, {"config", rc.echo()}, {"outputs", outputs}});
}

std::vector<OrderedConfig> gather(std::vector<std::optional<OrderedConfig>> slots) {
  std::size_t failed = 0;
  auto out = collect(std::move(slots), failed);
  if (out.empty()) throw EmptySample("every replica failed");
  if (failed > 0) std::cerr << "warning: " << failed << " replicas failed and were dropped\n";
  return out;
}

int do_simulate(const RunConfig& rc, std::ostream& log) {
  const json& p = rc.params;
  const OrderedConfig x0(p["x0"].get<std::vector<double>>());
  SdeParams params;
  params.eta = p["eta"].get<double>();
  params.rescaled = p["rescaled"].get<bool>();
  params.dt_max = p["dt"].get<double>();
  params.gap_safety = p["gap_safety"].get<double>();
  params.positivity_floor = p["positivity_floor"].get<double>();
  params.validate();
  const double horizon = p["horizon"].get<double>();
  std::vector<double> saves = p["save_times"].get<std::vector<double>>();
  if (saves.empty()) {
    const double every = p["save_every"].get<double>();
    if (!(every > 0.0)) throw ConfigError("save_every must be positive");
    for (std::size_t k = 1; static_cast<double>(k) * every < horizon * (1.0 - 1e-12); ++k)
      saves.push_back(static_cast<double>(k) * every);
    saves.push_back(horizon);
  }
  const std::uint64_t stream = stream_id(kTagSimulate, 0);
  RandomSource rng(rc.seed, stream);
  const Trajectory traj =
      simulate(x0, params, horizon, saves, rng, parse_integrator(p["integrator"].get<std::string>()));
  const fs::path dir = prepare(rc.out);
  write_trajectory((dir / "trajectory.csv").string(), traj);
  write_manifest(dir, rc, json{{"trajectory", "trajectory.csv"}, {"stream", stream}});
  log << "wrote " << (dir / "trajectory.csv").string() << " (" << traj.times.size() << " rows)\n";
  return kExitOk;
}

int do_sample_kernel(const RunConfig& rc, std::ostream& log) {
  const json& p = rc.params;
  const OrderedConfig x(p["x"].get<std::vector<double>>());
  const auto k = p["k"].get<std::size_t>();
  const auto n = p["n"].get<std::size_t>();
  const auto route = p["route"].get<std::string>();
  if (route != "direct" && route != "iterated")
    throw ConfigError("route must be 'direct' or 'iterated'");
  if (k >= x.size()) throw ConfigError("k must be smaller than the length of x");
  const auto samples = gather(run_replicas<OrderedConfig>(n, [&](std::size_t r) {
    RandomSource rng(rc.seed, stream_id(kTagKernel, r));
    return route == "direct" ? sample_chain(x, k, rng) : sample_chain_iterated(x, k, rng);
  }));
  const fs::path dir = prepare(rc.out);
  write_samples((dir / "samples.csv").string(), samples, "y");
  write_manifest(dir, rc, json{{"samples", "samples.csv"}});
  log << "wrote " << (dir / "samples.csv").string() << " (" << samples.size() << " rows)\n";
  return kExitOk;
}

int do_sample_equilibrium(const RunConfig& rc, std::ostream& log) {
  const json& p = rc.params;
  const auto np = p["n_particles"].get<std::size_t>();
  const double eta = p["eta"].get<double>();
  const auto n = p["n"].get<std::size_t>();
  const bool inverse = p["inverse"].get<bool>();
  const auto samples = gather(run_replicas<OrderedConfig>(n, [&](std::size_t r) {
    RandomSource rng(rc.seed, stream_id(kTagEquilibrium, r));
    return inverse ? sample_inverse_laguerre(np, eta, rng) : sample_laguerre(np, eta, rng);
  }));
  const fs::path dir = prepare(rc.out);
  write_samples((dir / "samples.csv").string(), samples, "x");
  write_manifest(dir, rc, json{{"samples", "samples.csv"}});
  log << "wrote " << (dir / "samples.csv").string() << " (" << samples.size() << " rows)\n";
  return kExitOk;
}

int do_kernel_table(const RunConfig& rc, std::ostream& log) {
  const json& p = rc.params;
  const fs::path dir = prepare(rc.out);
  const fs::path file = dir / "kernel_table.csv";
  std::ofstream out(file);
  if (!out) throw IoError("cannot open '" + file.string() + "' for writing");
  emit_kernel_table(p["eta"].get<double>(), p["grid"].get<std::vector<double>>(), out,
                    p["scale"].get<double>());
  write_manifest(dir, rc, json{{"table", "kernel_table.csv"}});
  log << "wrote " << file.string() << "\n";
  return kExitOk;
}

int do_experiment(const RunConfig& rc, std::ostream& log) {
  ExperimentReport report = run_experiment(rc.experiment, rc.params, rc.seed);
  report.config = rc.echo();
  const fs::path dir = prepare(rc.out);
  write_json(dir / "report.json", report.to_json());
  for (const auto& [name, table] : report.tables) write_table((dir / (name + ".csv")).string(), table);
  for (const auto& c : report.criteria)
    log << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.statistic << " = "
        << report.statistics.at(c.statistic) << " " << c.comparator << " " << c.threshold << "\n";
  log << "wrote " << (dir / "report.json").string() << "\n";
  return report.passed() ? kExitOk : kExitFailed;
}

}  // namespace

ExperimentReport run_experiment(const std::string& name, const json& params, std::uint64_t seed) {
  if (name == "intertwining") return test_intertwining(to_intertwining(params), seed);
  if (name == "uniform-approx") return test_uniform_approx(to_uniform_approx(params), seed);
  if (name == "equilibrium") return test_equilibrium(to_equilibrium(params), seed);
  if (name == "coupling") return test_coupling_l2(to_coupling(params), seed);
  if (name == "collision") return test_collision_bound(to_collision(params), seed);
  if (name == "hard-edge") return test_hard_edge_density(to_hard_edge(params), seed);
  if (name == "matrix-eigen") return test_matrix_eigen_agreement(to_matrix_eigen(params), seed);
  throw ConfigError("unknown experiment '" + name + "'");
}

int execute(const RunConfig& rc, std::ostream& log) {
  set_thread_count(rc.threads);
  if (rc.command == "simulate") return do_simulate(rc, log);
  if (rc.command == "sample-kernel") return do_sample_kernel(rc, log);
  if (rc.command == "sample-equilibrium") return do_sample_equilibrium(rc, log);
  if (rc.command == "kernel-table") return do_kernel_table(rc, log);
  if (rc.command == "experiment") return do_experiment(rc, log);
  throw ConfigError("unknown command '" + rc.command + "'");
}

int run(const std::string& command, const std::string& experiment, const std::string& config_path,
        const std::vector<std::string>& overrides, const FlagOverrides& flags, std::ostream& log,
        std::ostream& err) {
  try {
    json doc = json::object();
    std::string text;
    std::string origin = "<config>";
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ConfigError("cannot read config '" + config_path + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
      origin = config_path;
      doc = parse_document(text, origin);
    }
    for (const auto& o : overrides) apply_override(doc, o);
    const RunConfig rc = resolve(command, experiment, std::move(doc), flags, origin, text);
    return execute(rc, log);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
  } catch (const ParameterError& e) {
    err << "invalid parameter: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

int main(int argc, char** argv) {
  CLI::App app{"hard-edge particle system simulations and checks", "hardedge"};
  app.set_version_flag("--version", std::string(version_string()));
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out;
  std::string experiment;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config document")->check(CLI::ExistingFile);
    sub->add_option("--set", overrides, "dotted.key=value override (repeatable)");
    sub->add_option("--seed", seed, "master seed (default: config, then HARDEDGE_SEED, then 0)");
    sub->add_option("--threads", threads, "worker threads (default: all cores)");
    sub->add_option("--out", out, "output directory (default: .)");
  };
  common(app.add_subcommand("simulate", "integrate one trajectory"));
  common(app.add_subcommand("sample-kernel", "sample the corner kernel"));
  common(app.add_subcommand("sample-equilibrium", "sample the (inverse) Laguerre ensemble"));
  common(app.add_subcommand("kernel-table", "tabulate the inverse Bessel kernel"));
  auto* exp = app.add_subcommand("experiment", "run a named experiment");
  common(exp);
  std::string names;
  for (const auto& n : experiment_names()) names += (names.empty() ? "" : "|") + n;
  exp->add_option("name", experiment, names);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  FlagOverrides flags;
  if (chosen->count("--seed") > 0) flags.seed = seed;
  if (chosen->count("--threads") > 0) flags.threads = threads;
  if (chosen->count("--out") > 0) flags.out = out;
  return run(chosen->get_name(), experiment, config_path, overrides, flags, std::cout, std::cerr);
}

}  // namespace hardedge::cli
