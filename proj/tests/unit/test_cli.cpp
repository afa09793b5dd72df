#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hardedge/cli/commands.hpp"
#include "hardedge/cli/config.hpp"
#include "hardedge/cli/csv.hpp"
#include "hardedge/core/errors.hpp"
#include "hardedge/sde/eigen_sde.hpp"

using namespace hardedge;
using namespace hardedge::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto p = fs::temp_directory_path() / ("hardedge_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

json read_json(const fs::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

}  // namespace

TEST_CASE("malformed documents report line and column") {
  const std::string text = "{\n  \"n\": 5,\n  \"t\": ,\n}\n";
  const auto msg = message_of([&] { parse_document(text, "cfg.json"); });
  CHECK(msg.find("cfg.json:3:") == 0);
  CHECK_THROWS_AS(parse_document("[1, 2]"), ConfigError);
}

TEST_CASE("unknown keys are rejected with their line") {
  const std::string text = "{\n  \"x0\": [3, 2, 1],\n  \"horizn\": 1\n}\n";
  const auto msg = message_of([&] { resolve("simulate", "", parse_document(text), {}, "sim.json", text); });
  CHECK(msg.find("sim.json:3") == 0);
  CHECK(msg.find("horizn") != std::string::npos);
}

TEST_CASE("required keys, types and ranges are validated") {
  CHECK_THROWS_AS(resolve("simulate", "", json{{"x0", {3, 2, 1}}}, {}), ConfigError);
  CHECK_THROWS_AS(resolve("experiment", "collision", json{{"n", "many"}}, {}), ConfigError);
  CHECK_THROWS_AS(resolve("experiment", "collision", json{{"n", 2.5}}, {}), ConfigError);
  CHECK_THROWS_AS(resolve("experiment", "collision", json{{"n", -3}}, {}), ConfigError);
  CHECK_THROWS_AS(resolve("experiment", "collision", json{{"dt", 0.0}}, {}), ConfigError);
  CHECK_THROWS_AS(resolve("experiment", "collision", json{{"eta", -1.0}}, {}), ConfigError);
  CHECK_THROWS_AS(resolve("experiment", "collision", json{{"integrator", "rk4"}}, {}), ConfigError);
  CHECK_THROWS_AS(resolve("experiment", "intertwining", json{{"x", {1, 2, 3}}}, {}), ConfigError);
  CHECK_THROWS_AS(resolve("kernel-table", "", json{{"grid", {1.0, 0.5}}}, {}), ConfigError);
  CHECK_THROWS_AS(resolve("experiment", "nope", json::object(), {}), ConfigError);
  CHECK_THROWS_AS(resolve("experiment", "collision", json{{"experiment", "coupling"}}, {}), ConfigError);
  const auto rc = resolve("experiment", "", json{{"experiment", "collision"}, {"n", 1e3}}, {});
  CHECK(rc.experiment == "collision");
  CHECK(rc.params["n"] == 1000);
}

TEST_CASE("overrides take precedence over the document") {
  json doc{{"n", 50}, {"t", 1.0}, {"ns", {2, 4}}};
  apply_override(doc, "n=100");
  apply_override(doc, "t=0.5");
  apply_override(doc, "ns.1=8");
  apply_override(doc, "integrator=log");
  const auto rc = resolve("experiment", "collision", doc, {});
  CHECK(rc.params["n"] == 100);
  CHECK(rc.params["t"] == 0.5);
  CHECK(rc.params["ns"] == json({2, 8}));
  CHECK(rc.params["integrator"] == "log");
  CHECK_THROWS_AS(apply_override(doc, "novalue"), ConfigError);
  CHECK_THROWS_AS(apply_override(doc, "ns.9=1"), ConfigError);
}

TEST_CASE("seed precedence and the environment fallback") {
  ::unsetenv("HARDEDGE_SEED");
  CHECK(resolve("experiment", "collision", json::object(), {}).seed == 0);
  ::setenv("HARDEDGE_SEED", "77", 1);
  CHECK(resolve("experiment", "collision", json::object(), {}).seed == 77);
  CHECK(resolve("experiment", "collision", json{{"seed", 5}}, {}).seed == 5);
  FlagOverrides f;
  f.seed = 9;
  CHECK(resolve("experiment", "collision", json{{"seed", 5}}, f).seed == 9);
  ::setenv("HARDEDGE_SEED", "abc", 1);
  CHECK_THROWS_AS(resolve("experiment", "collision", json::object(), {}), ConfigError);
  ::unsetenv("HARDEDGE_SEED");
}

TEST_CASE("echoed config leaves out threads and output") {
  FlagOverrides f;
  f.threads = 3;
  f.out = "/tmp/x";
  const auto rc = resolve("experiment", "collision", json{{"seed", 4}}, f);
  const auto e = rc.echo();
  CHECK(e["seed"] == 4);
  CHECK(e["experiment"] == "collision");
  CHECK_FALSE(e.contains("threads"));
  CHECK_FALSE(e.contains("out"));
  CHECK(e["delta"] == 0.05);
}

TEST_CASE("trajectory round trip keeps every digit") {
  RandomSource rng(61, 0);
  SdeParams p;
  const auto traj = simulate(OrderedConfig{3.0, 2.0, 1.0}, p, 0.5, {0.1, 0.25, 0.5}, rng);
  std::stringstream ss;
  write_trajectory(ss, traj);
  CHECK(ss.str().rfind("t,x1,x2,x3\n", 0) == 0);
  const auto back = read_trajectory(ss);
  CHECK(back.times == traj.times);
  CHECK(back.states == traj.states);
  std::stringstream bad("t,x1\n0,abc\n");
  CHECK_THROWS_AS(read_trajectory(bad), IoError);
  std::stringstream unordered("t,x1,x2\n0,1,2\n");
  CHECK_THROWS_AS(read_trajectory(unordered), IoError);
}

TEST_CASE("kernel table format") {
  std::stringstream one;
  emit_kernel_table(1.0, {0.5}, one, 4.0);
  std::string line;
  int rows = 0;
  std::getline(one, line);
  CHECK(line == "x,y,value");
  while (std::getline(one, line)) ++rows;
  CHECK(rows == 1);

  std::stringstream sym;
  emit_kernel_table(1.0, {0.3, 1.0, 2.0}, sym, 4.0);
  std::getline(sym, line);
  std::map<std::pair<std::string, std::string>, double> vals;
  while (std::getline(sym, line)) {
    std::stringstream ls(line);
    std::string x, y, v;
    std::getline(ls, x, ',');
    std::getline(ls, y, ',');
    std::getline(ls, v, ',');
    vals[{x, y}] = std::stod(v);
    if (x == y) CHECK(std::stod(v) > 0.0);
  }
  CHECK(vals.size() == 9);
  for (const auto& [k, v] : vals) CHECK(vals.at({k.second, k.first}) == v);
  std::stringstream err;
  CHECK_THROWS_AS(emit_kernel_table(1.0, {1.0, 0.5}, err, 4.0), DomainError);
}

TEST_CASE("run writes artifacts and maps outcomes to exit codes") {
  const auto dir = scratch("run");
  std::stringstream log, err;
  {
    std::ofstream cfg(dir / "sim.json");
    cfg << "{\n  \"x0\": [3, 2, 1],\n  \"horizon\": 0.05\n}\n";
  }
  FlagOverrides f;
  f.seed = 7;
  f.out = (dir / "sim").string();
  CHECK(run("simulate", "", (dir / "sim.json").string(), {}, f, log, err) == kExitOk);
  const auto traj = read_trajectory((dir / "sim" / "trajectory.csv").string());
  CHECK(traj.times.back() == doctest::Approx(0.05));
  const auto manifest = read_json(dir / "sim" / "run.json");
  CHECK(manifest["config"]["seed"] == 7);
  CHECK(manifest["version"] == version_string());

  // same seed, same file
  f.out = (dir / "sim2").string();
  CHECK(run("simulate", "", (dir / "sim.json").string(), {}, f, log, err) == kExitOk);
  std::ifstream a(dir / "sim" / "trajectory.csv"), b(dir / "sim2" / "trajectory.csv");
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());

  f.out = (dir / "cp").string();
  const std::vector<std::string> ok{"ns=[8,16,32]", "horizon=0.1", "paths=1"};
  CHECK(run("experiment", "coupling", "", ok, f, log, err) == kExitOk);
  const auto rep = read_json(dir / "cp" / "report.json");
  CHECK(rep["pass"] == true);
  CHECK(rep["config"]["horizon"] == 0.1);
  CHECK(rep["config"]["seed"] == 7);
  CHECK(rep["version"] == version_string());
  CHECK(fs::exists(dir / "cp" / "discrepancies.csv"));

  auto failing = ok;
  failing.push_back("slack=0.01");
  CHECK(run("experiment", "coupling", "", failing, f, log, err) == kExitFailed);
  CHECK(run("experiment", "coupling", "", {"bogus=1"}, f, log, err) == kExitUsage);
  CHECK(run("experiment", "coupling", (dir / "missing.json").string(), {}, f, log, err) == kExitUsage);
  CHECK(run("experiment", "coupling", "", {"ns=[8]"}, f, log, err) == kExitUsage);

  f.out = (dir / "kt").string();
  CHECK(run("kernel-table", "", "", {"grid=[0.5,1,2]"}, f, log, err) == kExitOk);
  CHECK(fs::exists(dir / "kt" / "kernel_table.csv"));
  f.out = (dir / "sk").string();
  CHECK(run("sample-kernel", "", "", {"x=[5,4,3,2,1]", "k=2", "n=10"}, f, log, err) == kExitOk);
  f.out = (dir / "se").string();
  CHECK(run("sample-equilibrium", "", "", {"n=10"}, f, log, err) == kExitOk);
  fs::remove_all(dir);
}
