#include <cmath>

#include "common.hpp"
#include "hardedge/experiments/experiments.hpp"
#include "hardedge/experiments/stats.hpp"
#include "hardedge/kernels/corner.hpp"

namespace hardedge {

using namespace detail;

namespace {

std::vector<OrderedConfig> evolve_then_corner(const OrderedConfig& x, const SdeParams& p, double t,
                                              Integrator integ, std::size_t n, std::uint64_t seed,
                                              std::uint64_t tag, std::size_t& failed) {
  auto slots = run_replicas<OrderedConfig>(n, [&](std::size_t r) {
    RandomSource rng(seed, stream_id(tag, r));
    std::vector<double> v = x.to_vector();
    advance(v, p, t, rng, integ);
    return sample_corner(OrderedConfig(std::move(v)), rng);
  });
  return collect(std::move(slots), failed);
}

std::vector<OrderedConfig> corner_then_evolve(const OrderedConfig& x, const SdeParams& p, double t,
                                              Integrator integ, std::size_t n, std::uint64_t seed,
                                              std::uint64_t tag, std::size_t& failed) {
  auto slots = run_replicas<OrderedConfig>(n, [&](std::size_t r) {
    RandomSource rng(seed, stream_id(tag, r));
    const OrderedConfig y = sample_corner(x, rng);
    if (t == 0.0) return y;
    if (!y.strictly_interior()) throw DomainError("corner sample on the chamber boundary");
    std::vector<double> v = y.to_vector();
    advance(v, p, t, rng, integ);
    return OrderedConfig(std::move(v));
  });
  return collect(std::move(slots), failed);
}

}  // namespace

ExperimentReport test_intertwining(const IntertwiningConfig& cfg, std::uint64_t seed) {
  const OrderedConfig x(cfg.x);
  if (x.size() < 2) throw ParameterError("intertwining: need at least two starting points");
  if (!x.strictly_interior()) throw DomainError("intertwining: x must be strictly ordered and positive");
  if (!(cfg.t >= 0.0)) throw ParameterError("intertwining: t must be nonnegative");
  const Integrator integ = parse_integrator(cfg.integrator);

  ExperimentReport rep;
  rep.name = "intertwining";
  rep.seeds = {seed};
  rep.params = {{"N", x.size() - 1}, {"t", cfg.t}, {"n", cfg.n}, {"dt", cfg.dt},
                {"n_perm", cfg.n_perm}, {"integrator", cfg.integrator}};

  for (std::size_t e = 0; e < cfg.etas.size(); ++e) {
    const SdeParams p = plain_params(cfg.etas[e], cfg.dt);
    std::size_t fa = 0, fb = 0;
    const auto a = evolve_then_corner(x, p, cfg.t, integ, cfg.n, seed, kTagA + e, fa);
    const auto b = corner_then_evolve(x, p, cfg.t, integ, cfg.n, seed, kTagB + e, fb);
    RandomSource trng(seed, stream_id(kTagTest, e));
    const auto test = energy_permutation_test(to_sample_set(a), to_sample_set(b), cfg.n_perm, trng);
    rep.set(indexed("energy_stat_eta", e), test.statistic);
    rep.set(indexed("energy_p_eta", e), test.pvalue);
    rep.set(indexed("failed_a_eta", e), static_cast<double>(fa));
    rep.set(indexed("failed_b_eta", e), static_cast<double>(fb));
    rep.set(indexed("eta", e), cfg.etas[e]);
    for (std::size_t k = 0; k < x.size() - 1; ++k) {
      const auto ks = ks_two_sample(column(a, k), column(b, k));
      rep.set("ks_p_eta_" + std::to_string(e) + "_coord_" + std::to_string(k), ks.pvalue);
    }
    rep.require(indexed("intertwining_eta", e), indexed("energy_p_eta", e), ">", cfg.alpha);
  }

  if (cfg.negative_control) {
    std::size_t fa = 0, fb = 0;
    const auto a = evolve_then_corner(x, plain_params(cfg.control_eta_a, cfg.dt), cfg.t, integ,
                                      cfg.n, seed, kTagControl, fa);
    const auto b = corner_then_evolve(x, plain_params(cfg.control_eta_b, cfg.dt), cfg.t, integ,
                                      cfg.n, seed, kTagControl + 1, fb);
    RandomSource trng(seed, stream_id(kTagTest, 100));
    const auto test = energy_permutation_test(to_sample_set(a), to_sample_set(b), cfg.n_perm, trng);
    rep.set("control_energy_stat", test.statistic);
    rep.set("control_energy_p", test.pvalue);
    rep.require("control_rejects", "control_energy_p", "<", cfg.alpha);
  }

  if (cfg.sanity_n > 0 && cfg.t > 0.0 && !cfg.etas.empty()) {
    std::size_t f1 = 0, f2 = 0;
    const SdeParams p = plain_params(cfg.etas.front(), cfg.dt);
    const SdeParams half = plain_params(cfg.etas.front(), 0.5 * cfg.dt);
    const auto a = evolve_then_corner(x, p, cfg.t, integ, cfg.sanity_n, seed, kTagSanity, f1);
    const auto b = evolve_then_corner(x, half, cfg.t, integ, cfg.sanity_n, seed, kTagSanity + 1, f2);
    RandomSource trng(seed, stream_id(kTagTest, 200));
    const auto test = energy_permutation_test(to_sample_set(a), to_sample_set(b), cfg.n_perm, trng);
    rep.set("dt_halving_p", test.pvalue);
    rep.require("dt_halving_stable", "dt_halving_p", ">", cfg.alpha);
  }
  return rep;
}

}  // namespace hardedge
