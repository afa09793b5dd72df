#include <cmath>
#include <limits>

#include "common.hpp"
#include "hardedge/equilibrium/laguerre.hpp"
#include "hardedge/experiments/experiments.hpp"
#include "hardedge/experiments/stats.hpp"

namespace hardedge {

using namespace detail;

namespace {

SampleSet transformed(const std::vector<OrderedConfig>& v, bool log_coordinates) {
  SampleSet s = to_sample_set(v);
  if (log_coordinates) s = s.array().log().matrix();
  return s;
}

// States of each replica at every time of the grid; a replica that fails at
// any time is dropped entirely.
std::vector<std::vector<OrderedConfig>> relax(const EquilibriumConfig& cfg, const SdeParams& p,
                                              Integrator integ, const std::vector<double>& grid,
                                              std::size_t n, std::uint64_t seed,
                                              std::uint64_t tag, std::size_t& failed) {
  using Path = std::vector<OrderedConfig>;
  auto slots = run_replicas<Path>(n, [&](std::size_t r) {
    RandomSource rng(seed, stream_id(tag, r));
    std::vector<double> v = cfg.stationary_start
                                ? sample_inverse_laguerre(cfg.n_particles, cfg.eta, rng).to_vector()
                                : cfg.x0;
    Path path;
    double t = 0.0;
    for (double target : grid) {
      advance(v, p, target - t, rng, integ);
      t = target;
      path.emplace_back(v);
    }
    return path;
  });
  return collect(std::move(slots), failed);
}

std::vector<OrderedConfig> reference(const EquilibriumConfig& cfg, std::size_t n, std::uint64_t seed,
                                     std::uint64_t tag) {
  std::size_t failed = 0;
  auto slots = run_replicas<OrderedConfig>(n, [&](std::size_t r) {
    RandomSource rng(seed, stream_id(tag, r));
    return sample_inverse_laguerre(cfg.n_particles, cfg.eta, rng);
  });
  return collect(std::move(slots), failed);
}

}  // namespace

ExperimentReport test_equilibrium(const EquilibriumConfig& cfg, std::uint64_t seed) {
  if (!(cfg.eta > -1.0)) throw ParameterError("equilibrium: eta must exceed -1");
  if (cfg.t_grid.empty()) throw ParameterError("equilibrium: empty time grid");
  for (std::size_t k = 0; k < cfg.t_grid.size(); ++k)
    if (!(cfg.t_grid[k] > (k ? cfg.t_grid[k - 1] : 0.0)))
      throw ParameterError("equilibrium: time grid must be positive and increasing");
  if (!cfg.stationary_start) {
    if (cfg.x0.size() != cfg.n_particles)
      throw ParameterError("equilibrium: x0 must have n_particles entries");
    if (!OrderedConfig(cfg.x0).strictly_interior())
      throw DomainError("equilibrium: x0 must be strictly ordered and positive");
  }
  const Integrator integ = parse_integrator(cfg.integrator);
  const SdeParams p = plain_params(cfg.eta, cfg.dt);

  ExperimentReport rep;
  rep.name = "equilibrium";
  rep.seeds = {seed};
  rep.params = {{"N", cfg.n_particles}, {"eta", cfg.eta}, {"n", cfg.n}, {"dt", cfg.dt},
                {"t_grid", cfg.t_grid}, {"stationary_start", cfg.stationary_start},
                {"log_coordinates", cfg.log_coordinates}, {"integrator", cfg.integrator}};

  std::size_t failed = 0;
  const auto paths = relax(cfg, p, integ, cfg.t_grid, cfg.n, seed, kTagA, failed);
  rep.set("failed_replicas", static_cast<double>(failed));
  const auto ref = reference(cfg, cfg.n, seed, kTagReference);
  const SampleSet ref_set = transformed(ref, cfg.log_coordinates);

  std::vector<double> stats;
  Table curve{{"t", "energy_stat", "energy_p"}, {}};
  std::vector<OrderedConfig> at;
  for (std::size_t k = 0; k < cfg.t_grid.size(); ++k) {
    at.clear();
    for (const auto& path : paths) at.push_back(path[k]);
    RandomSource trng(seed, stream_id(kTagTest, k));
    const auto test = energy_permutation_test(transformed(at, cfg.log_coordinates), ref_set,
                                              cfg.n_perm, trng);
    rep.set(indexed("energy_stat_t", k), test.statistic);
    rep.set(indexed("energy_p_t", k), test.pvalue);
    curve.rows.push_back({cfg.t_grid[k], test.statistic, test.pvalue});
    stats.push_back(test.statistic);
  }
  rep.tables["energy_curve"] = curve;
  rep.set("energy_p_final", rep.statistics.at(indexed("energy_p_t", cfg.t_grid.size() - 1)));
  rep.require("equilibrium_reached", "energy_p_final", ">", cfg.alpha);

  if (!cfg.stationary_start) {
    double drop = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < stats.size(); ++k) drop = std::min(drop, stats[k] - stats[k + 1]);
    if (stats.size() < 2) drop = 0.0;
    rep.set("min_consecutive_drop", drop);
    if (stats.size() >= 2) rep.require("statistic_decreasing", "min_consecutive_drop", ">", 0.0);
  }

  if (cfg.n_particles == 1) {
    std::vector<double> final_values;
    for (const auto& path : paths) final_values.push_back(path.back()[0]);
    const double shape = cfg.eta + 1.0;
    const auto ks = ks_one_sample(final_values, [shape](double v) { return inverse_gamma_cdf(shape, v); });
    rep.set("ks_stat_final", ks.statistic);
    rep.set("ks_p_final", ks.pvalue);
    rep.require("inverse_gamma_ks", "ks_p_final", ">", cfg.alpha);
  }

  if (cfg.sanity_n > 0) {
    std::size_t f1 = 0, f2 = 0;
    const std::vector<double> last{cfg.t_grid.back()};
    const auto s1 = relax(cfg, p, integ, last, cfg.sanity_n, seed, kTagSanity, f1);
    const auto s2 = relax(cfg, plain_params(cfg.eta, 0.5 * cfg.dt), integ, last, cfg.sanity_n, seed,
                          kTagSanity + 1, f2);
    std::vector<OrderedConfig> a, b;
    for (const auto& path : s1) a.push_back(path.back());
    for (const auto& path : s2) b.push_back(path.back());
    RandomSource trng(seed, stream_id(kTagTest, 1000));
    const auto test = energy_permutation_test(transformed(a, cfg.log_coordinates),
                                              transformed(b, cfg.log_coordinates), cfg.n_perm, trng);
    rep.set("dt_halving_p", test.pvalue);
    rep.require("dt_halving_stable", "dt_halving_p", ">", cfg.alpha);
  }
  return rep;
}

}  // namespace hardedge
