#include <cmath>

#include "common.hpp"
#include "hardedge/experiments/brownian_sheet.hpp"
#include "hardedge/experiments/experiments.hpp"
#include "hardedge/experiments/stats.hpp"

namespace hardedge {

using namespace detail;

namespace {

// sum_i (u_i - v_i)^2 with the shorter vector padded by zeros.
double padded_sq_distance(const std::vector<double>& u, const std::vector<double>& v) {
  const std::size_t m = std::max(u.size(), v.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double a = i < u.size() ? u[i] : 0.0;
    const double b = i < v.size() ? v[i] : 0.0;
    acc += (a - b) * (a - b);
  }
  return acc;
}

}  // namespace

std::vector<double> coupling_start(const CouplingConfig& cfg, std::size_t n) {
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double atom = i < cfg.omega_xs.size() ? cfg.omega_xs[i] : 0.0;
    u[i] = atom + cfg.filler_scale * std::pow(static_cast<double>(i + 1), -cfg.filler_power);
  }
  return u;
}

ExperimentReport test_coupling_l2(const CouplingConfig& cfg, std::uint64_t seed) {
  const OmegaPlusPoint omega(cfg.omega_xs, cfg.omega_gamma);
  if (cfg.ns.size() < 2) throw ParameterError("coupling: need at least two sizes");
  for (std::size_t k = 0; k < cfg.ns.size(); ++k) {
    if (cfg.ns[k] <= omega.support_size())
      throw ParameterError("coupling: every N must exceed the support size");
    if (k && cfg.ns[k] < cfg.ns[k - 1]) throw ParameterError("coupling: sizes must not decrease");
  }
  if (!(cfg.filler_scale > 0.0 && cfg.filler_power > 0.0))
    throw ParameterError("coupling: fillers must be positive and decaying");
  if (!(cfg.horizon >= 0.0 && cfg.dt > 0.0)) throw ParameterError("coupling: bad horizon or dt");
  const Integrator integ = parse_integrator(cfg.integrator);
  const std::size_t steps = static_cast<std::size_t>(std::llround(cfg.horizon / cfg.dt));
  const std::size_t pairs = cfg.ns.size() - 1;

  ExperimentReport rep;
  rep.name = "coupling-l2";
  rep.seeds = {seed};
  rep.params = {{"ns", cfg.ns}, {"T", cfg.horizon}, {"dt", cfg.dt}, {"eta", cfg.eta},
                {"paths", cfg.paths}, {"filler_scale", cfg.filler_scale},
                {"filler_power", cfg.filler_power}, {"integrator", cfg.integrator}};

  std::vector<SdeParams> params(cfg.ns.size());
  for (std::size_t k = 0; k < cfg.ns.size(); ++k) {
    params[k] = plain_params(cfg.eta, cfg.dt);
    params[k].rescaled = true;
  }

  using Sup = std::vector<double>;
  auto slots = run_replicas<Sup>(cfg.paths, [&](std::size_t path) {
    const BrownianSheet sheet(mix64(seed ^ mix64(path + 1)), cfg.dt);
    std::vector<std::vector<double>> u(cfg.ns.size());
    for (std::size_t k = 0; k < cfg.ns.size(); ++k) u[k] = coupling_start(cfg, cfg.ns[k]);
    Sup sup(pairs);
    for (std::size_t k = 0; k < pairs; ++k) sup[k] = padded_sq_distance(u[k], u[k + 1]);
    for (std::size_t s = 0; s < steps; ++s) {
      for (std::size_t k = 0; k < cfg.ns.size(); ++k) step_on_sheet(u[k], params[k], sheet, s, integ);
      for (std::size_t k = 0; k < pairs; ++k)
        sup[k] = std::max(sup[k], padded_sq_distance(u[k], u[k + 1]));
    }
    return sup;
  });
  std::size_t failed = 0;
  const auto sups = collect(std::move(slots), failed);
  rep.set("step_failures", static_cast<double>(failed));
  rep.require("no_step_failures", "step_failures", "<=", 0.0);
  if (sups.empty()) return rep;

  Table table{{"N", "N_next", "initial", "sup_discrepancy", "se"}, {}};
  std::vector<double> d(pairs);
  for (std::size_t k = 0; k < pairs; ++k) {
    std::vector<double> col;
    for (const auto& s : sups) col.push_back(s[k]);
    const auto m = mean_estimate(col);
    d[k] = m.mean;
    const double initial = padded_sq_distance(coupling_start(cfg, cfg.ns[k]), coupling_start(cfg, cfg.ns[k + 1]));
    rep.set(indexed("sup_discrepancy", k), m.mean);
    rep.set(indexed("initial_discrepancy", k), initial);
    table.rows.push_back({static_cast<double>(cfg.ns[k]), static_cast<double>(cfg.ns[k + 1]), initial,
                          m.mean, m.se});
  }
  rep.tables["discrepancies"] = table;
  for (std::size_t k = 0; k + 1 < pairs; ++k) {
    const double ratio = d[k] > 0.0 ? d[k + 1] / d[k] : (d[k + 1] > 0.0 ? INFINITY : 0.0);
    rep.set(indexed("ratio", k), ratio);
    rep.require(indexed("nonincreasing", k), indexed("ratio", k), "<=", cfg.slack);
  }
  return rep;
}

}  // namespace hardedge
