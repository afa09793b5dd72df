#include <cmath>
#include <limits>

#include "common.hpp"
#include "hardedge/core/observables.hpp"
#include "hardedge/experiments/experiments.hpp"
#include "hardedge/experiments/stats.hpp"
#include "hardedge/kernels/corner.hpp"

namespace hardedge {

using namespace detail;

double bump(double y, double center, double halfwidth, double amplitude) {
  const double u = (y - center) / halfwidth;
  if (std::abs(u) >= 1.0) return 0.0;
  return amplitude * std::exp(1.0 - 1.0 / (1.0 - u * u));
}

ExperimentReport test_uniform_approx(const UniformApproxConfig& cfg, std::uint64_t seed) {
  if (cfg.ns.empty()) throw ParameterError("uniform_approx: empty size list");
  if (cfg.k != 1) throw ParameterError("uniform_approx: the bump test function is one-dimensional, K must be 1");
  if (!(cfg.ratio > 0.0 && cfg.ratio < 1.0 && cfg.scale > 0.0))
    throw ParameterError("uniform_approx: need scale > 0 and 0 < ratio < 1");

  ExperimentReport rep;
  rep.name = "uniform-approx";
  rep.seeds = {seed};
  rep.params = {{"K", cfg.k}, {"ns", cfg.ns}, {"n", cfg.n}, {"scale", cfg.scale},
                {"ratio", cfg.ratio}, {"bump_center", cfg.bump_center},
                {"bump_halfwidth", cfg.bump_halfwidth}};
  const auto g = [&](double y) { return bump(y, cfg.bump_center, cfg.bump_halfwidth, cfg.bump_amplitude); };

  std::vector<double> diffs, ses;
  Table table{{"N", "finite", "boundary", "difference", "se"}, {}};
  for (std::size_t idx = 0; idx < cfg.ns.size(); ++idx) {
    const std::size_t n = cfg.ns[idx];
    if (n <= cfg.k) throw ParameterError("uniform_approx: every N must exceed K");
    std::vector<double> xv(n);
    for (std::size_t i = 0; i < n; ++i)
      xv[i] = static_cast<double>(n) * cfg.scale * std::pow(cfg.ratio, static_cast<double>(i));
    const OrderedConfig x(xv);
    const OmegaPlusPoint omega = embed(x);

    struct Pair {
      double finite, boundary;
    };
    // Both sides read the same Gaussian matrix from one stream.
    auto slots = run_replicas<Pair>(cfg.n, [&](std::size_t r) {
      RandomSource r1(seed, stream_id(kTagA + idx, r));
      RandomSource r2(seed, stream_id(kTagA + idx, r));
      const double a = g(sample_chain(x, cfg.k, r1)[0]);
      const double b = g(sample_boundary_corner(omega, cfg.k, cfg.truncation_eps, r2)[0]);
      return Pair{a, b};
    });
    std::size_t failed = 0;
    const auto pairs = collect(std::move(slots), failed);
    std::vector<double> fa, fb, d;
    for (const auto& p : pairs) {
      fa.push_back(p.finite);
      fb.push_back(p.boundary);
      d.push_back(p.finite - p.boundary);
    }
    const auto ma = mean_estimate(fa);
    const auto mb = mean_estimate(fb);
    const auto md = mean_estimate(d);
    rep.set(indexed("finite_mean_N", n), ma.mean);
    rep.set(indexed("boundary_mean_N", n), mb.mean);
    rep.set(indexed("abs_difference_N", n), std::abs(md.mean));
    rep.set(indexed("difference_se_N", n), md.se);
    table.rows.push_back({static_cast<double>(n), ma.mean, mb.mean, md.mean, md.se});
    diffs.push_back(std::abs(md.mean));
    ses.push_back(md.se);
  }
  rep.tables["differences"] = table;

  rep.set("final_abs_difference", diffs.back());
  rep.require("final_difference_small", "final_abs_difference", "<", cfg.threshold);
  // Largest increase beyond the allowed slack; nonpositive means nonincreasing.
  double excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
    const double slack = cfg.slack_sigmas * std::hypot(ses[i], ses[i + 1]);
    excess = std::max(excess, diffs[i + 1] - diffs[i] - slack);
  }
  if (diffs.size() < 2) excess = 0.0;
  rep.set("max_increase_beyond_slack", excess);
  rep.require("nonincreasing", "max_increase_beyond_slack", "<=", 0.0);
  return rep;
}

}  // namespace hardedge
