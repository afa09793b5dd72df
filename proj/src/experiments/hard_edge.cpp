#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

#include "common.hpp"
#include "hardedge/equilibrium/bessel.hpp"
#include "hardedge/equilibrium/laguerre.hpp"
#include "hardedge/experiments/experiments.hpp"

namespace hardedge {

using namespace detail;

namespace {

// Integral of the one-point density over [a, b], composite Gauss-Legendre.
double kernel_mass(double eta, double scale, double a, double b) {
  constexpr int kPieces = 16;
  const double h = (b - a) / kPieces;
  double acc = 0.0;
  for (int i = 0; i < kPieces; ++i) {
    const double lo = a + i * h;
    acc += boost::math::quadrature::gauss<double, 20>::integrate(
        [&](double x) { return inverse_bessel_kernel(eta, x, x, scale); }, lo, lo + h);
  }
  return acc;
}

// Edges on [lo, hi] splitting the kernel mass into equal parts.
std::vector<double> equal_mass_edges(double eta, double scale, double lo, double hi, std::size_t bins) {
  constexpr int kFine = 2000;
  std::vector<double> grid(kFine + 1), cum(kFine + 1, 0.0);
  for (int i = 0; i <= kFine; ++i) grid[i] = lo * std::pow(hi / lo, static_cast<double>(i) / kFine);
  for (int i = 1; i <= kFine; ++i)
    cum[i] = cum[i - 1] + boost::math::quadrature::gauss<double, 7>::integrate(
                              [&](double x) { return inverse_bessel_kernel(eta, x, x, scale); },
                              grid[i - 1], grid[i]);
  std::vector<double> edges{lo};
  for (std::size_t b = 1; b < bins; ++b) {
    const double target = cum.back() * static_cast<double>(b) / static_cast<double>(bins);
    const auto it = std::lower_bound(cum.begin(), cum.end(), target);
    const auto i = static_cast<std::size_t>(it - cum.begin());
    const double f = (target - cum[i - 1]) / (cum[i] - cum[i - 1]);
    edges.push_back(grid[i - 1] + f * (grid[i] - grid[i - 1]));
  }
  edges.push_back(hi);
  return edges;
}

}  // namespace

ExperimentReport test_hard_edge_density(const HardEdgeConfig& cfg, std::uint64_t seed) {
  if (cfg.n_particles < cfg.top || cfg.top == 0) throw ParameterError("hard_edge: need 1 <= top <= N");
  if (!(cfg.bin_lo > 0.0 && cfg.bin_hi > cfg.bin_lo && cfg.bins >= 1))
    throw ParameterError("hard_edge: need 0 < bin_lo < bin_hi and bins >= 1");

  ExperimentReport rep;
  rep.name = "hard-edge-density";
  rep.seeds = {seed};
  rep.params = {{"N", cfg.n_particles}, {"eta", cfg.eta}, {"n", cfg.n}, {"top", cfg.top},
                {"bin_lo", cfg.bin_lo}, {"bin_hi", cfg.bin_hi}, {"bins", cfg.bins},
                {"scale", cfg.scale}, {"alt_scale", cfg.alt_scale}};

  const double nf = static_cast<double>(cfg.n_particles);
  auto slots = run_replicas<std::vector<double>>(cfg.n, [&](std::size_t r) {
    RandomSource rng(seed, stream_id(kTagA, r));
    const OrderedConfig x = sample_inverse_laguerre(cfg.n_particles, cfg.eta, rng);
    std::vector<double> top(cfg.top);
    for (std::size_t i = 0; i < cfg.top; ++i) top[i] = x[i] / nf;
    return top;
  });
  std::size_t failed = 0;
  const auto samples = collect(std::move(slots), failed);
  rep.set("failed_samples", static_cast<double>(failed));

  const std::vector<double> edges = equal_mass_edges(cfg.eta, cfg.scale, cfg.bin_lo, cfg.bin_hi, cfg.bins);
  std::vector<double> counts(cfg.bins, 0.0);
  for (const auto& s : samples)
    for (double v : s) {
      if (v < edges.front() || v >= edges.back()) continue;
      const auto b = static_cast<std::size_t>(std::upper_bound(edges.begin(), edges.end(), v) - edges.begin()) - 1;
      counts[b] += 1.0;
    }

  const double total = static_cast<double>(samples.size());
  double worst = 0.0, worst_alt = 0.0;
  std::size_t used = 0;
  Table table{{"lo", "hi", "count", "empirical", "kernel", "kernel_alt"}, {}};
  for (std::size_t b = 0; b < cfg.bins; ++b) {
    const double w = edges[b + 1] - edges[b];
    const double emp = counts[b] / (total * w);
    const double ker = kernel_mass(cfg.eta, cfg.scale, edges[b], edges[b + 1]) / w;
    const double alt = kernel_mass(cfg.eta, cfg.alt_scale, edges[b], edges[b + 1]) / w;
    table.rows.push_back({edges[b], edges[b + 1], counts[b], emp, ker, alt});
    if (counts[b] < cfg.min_count) continue;
    ++used;
    worst = std::max(worst, std::abs(emp - ker) / ker);
    worst_alt = std::max(worst_alt, std::abs(emp - alt) / alt);
  }
  rep.tables["histogram"] = table;
  rep.set("bins_used", static_cast<double>(used));
  rep.set("sup_relative_error", used ? worst : INFINITY);
  rep.set("sup_relative_error_alt_scale", used ? worst_alt : INFINITY);
  rep.require("density_matches", "sup_relative_error", "<", cfg.tolerance);
  return rep;
}

}  // namespace hardedge
