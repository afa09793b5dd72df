#include <cmath>

#include "common.hpp"
#include "hardedge/core/observables.hpp"
#include "hardedge/experiments/experiments.hpp"

namespace hardedge {

using namespace detail;

ExperimentReport test_collision_bound(const CollisionConfig& cfg, std::uint64_t seed) {
  if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) throw ParameterError("collision: delta must lie in (0, 1)");
  if (!(cfg.eps > 0.0 && cfg.t > 0.0)) throw ParameterError("collision: eps and t must be positive");
  if (!(cfg.ratio > 0.0 && cfg.ratio < 1.0 && cfg.top > 0.0))
    throw ParameterError("collision: need top > 0 and 0 < ratio < 1");
  const Integrator integ = parse_integrator(cfg.integrator);

  ExperimentReport rep;
  rep.name = "collision-bound";
  rep.seeds = {seed};
  rep.params = {{"ns", cfg.ns}, {"delta", cfg.delta}, {"eps", cfg.eps}, {"t", cfg.t},
                {"n", cfg.n}, {"eta", cfg.eta}, {"dt", cfg.dt}, {"integrator", cfg.integrator}};

  std::vector<OrderedConfig> starts;
  double c = 0.0;
  for (std::size_t n : cfg.ns) {
    if (n < 2) throw ParameterError("collision: every N must be at least 2");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = cfg.top * std::pow(cfg.ratio, static_cast<double>(i));
    starts.emplace_back(std::move(x));
    c = std::max(c, lyapunov_f(starts.back(), 1));
  }
  const double bound = (c + cfg.t / cfg.eps) / std::abs(std::log(cfg.delta));
  rep.set("lyapunov_c", c);
  rep.set("bound", bound);

  SdeParams p = plain_params(cfg.eta, cfg.dt);
  p.rescaled = true;
  Table table{{"N", "estimate", "se", "bound"}, {}};
  for (std::size_t idx = 0; idx < cfg.ns.size(); ++idx) {
    const OrderedConfig& x0 = starts[idx];
    // 1 when the top pair comes within ratio delta before t and before x_1 <= eps.
    auto slots = run_replicas<int>(cfg.n, [&](std::size_t r) {
      RandomSource rng(seed, stream_id(kTagA + idx, r));
      std::vector<double> v = x0.to_vector();
      const auto hit = [&] { return std::abs(1.0 - v[1] / v[0]) <= cfg.delta; };
      if (hit()) return 1;
      double s = 0.0;
      while (s < cfg.t) {
        if (v[0] <= cfg.eps) return 0;
        const double h = std::min(cfg.dt, cfg.t - s);
        try {
          advance(v, p, h, rng, integ);
        } catch (const StepFailure&) {
          return 1;
        }
        s = (cfg.t - s - h <= 1e-12 * cfg.dt) ? cfg.t : s + h;
        if (v[0] > cfg.eps && hit()) return 1;
      }
      return 0;
    });
    std::size_t failed = 0;
    const auto events = collect(std::move(slots), failed);
    double hits = static_cast<double>(failed);
    for (int e : events) hits += e;
    const double total = static_cast<double>(cfg.n);
    const double est = hits / total;
    const double se = std::sqrt(std::max(est * (1.0 - est), 0.0) / total);
    rep.set(indexed("estimate_N", cfg.ns[idx]), est);
    rep.set(indexed("se_N", cfg.ns[idx]), se);
    rep.set(indexed("excess_N", cfg.ns[idx]), est - bound - 3.0 * se);
    rep.require(indexed("bounded_N", cfg.ns[idx]), indexed("excess_N", cfg.ns[idx]), "<=", 0.0);
    table.rows.push_back({static_cast<double>(cfg.ns[idx]), est, se, bound});
  }
  rep.tables["estimates"] = table;
  return rep;
}

}  // namespace hardedge
