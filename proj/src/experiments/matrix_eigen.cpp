#include <algorithm>

#include "common.hpp"
#include "hardedge/experiments/experiments.hpp"
#include "hardedge/experiments/stats.hpp"
#include "hardedge/sde/matrix_sde.hpp"

namespace hardedge {

using namespace detail;

namespace {

std::vector<OrderedConfig> matrix_chain(const HermitianState& h0, const SdeParams& p, double t,
                                        std::size_t n, std::uint64_t seed, std::uint64_t tag,
                                        std::size_t& failed) {
  auto slots = run_replicas<OrderedConfig>(n, [&](std::size_t r) {
    RandomSource rng(seed, stream_id(tag, r));
    return eigenvalues(evolve_matrix(h0, p, t, rng));
  });
  return collect(std::move(slots), failed);
}

std::vector<OrderedConfig> eigen_chain(const OrderedConfig& x0, const SdeParams& p, double t,
                                       std::size_t n, std::uint64_t seed, std::uint64_t tag,
                                       std::size_t& failed) {
  auto slots = run_replicas<OrderedConfig>(n, [&](std::size_t r) {
    RandomSource rng(seed, stream_id(tag, r));
    std::vector<double> v = x0.to_vector();
    advance(v, p, t, rng);
    return OrderedConfig(std::move(v));
  });
  return collect(std::move(slots), failed);
}

double min_ks_pvalue(const std::vector<OrderedConfig>& a, const std::vector<OrderedConfig>& b,
                     ExperimentReport* rep, const std::string& prefix) {
  double m = 1.0;
  for (std::size_t k = 0; k < a.front().size(); ++k) {
    const auto ks = ks_two_sample(column(a, k), column(b, k));
    if (rep) {
      rep->set(indexed(prefix + "ks_stat_coord", k), ks.statistic);
      rep->set(indexed(prefix + "ks_p_coord", k), ks.pvalue);
    }
    m = std::min(m, ks.pvalue);
  }
  return m;
}

}  // namespace

ExperimentReport test_matrix_eigen_agreement(const MatrixEigenConfig& cfg, std::uint64_t seed) {
  const OrderedConfig x0(cfg.x0);
  if (!x0.strictly_interior()) throw DomainError("matrix_eigen: x0 must be strictly ordered and positive");
  const std::size_t n_particles = x0.size();
  const HermitianState h0 = HermitianState::diagonal(x0);
  const double level = cfg.alpha / static_cast<double>(n_particles);

  ExperimentReport rep;
  rep.name = "matrix-eigen";
  rep.seeds = {seed};
  rep.params = {{"N", n_particles}, {"eta", cfg.eta}, {"t", cfg.t}, {"n", cfg.n}, {"dt", cfg.dt}};

  const SdeParams p = plain_params(cfg.eta, cfg.dt);
  std::size_t fa = 0, fb = 0;
  const auto a = matrix_chain(h0, p, cfg.t, cfg.n, seed, kTagA, fa);
  const auto b = eigen_chain(x0, p, cfg.t, cfg.n, seed, kTagB, fb);
  rep.set("failed_matrix", static_cast<double>(fa));
  rep.set("failed_eigen", static_cast<double>(fb));
  rep.set("min_ks_p", min_ks_pvalue(a, b, &rep, ""));
  rep.set("bonferroni_level", level);
  rep.require("marginals_agree", "min_ks_p", ">", level);

  if (cfg.negative_control) {
    std::size_t fc = 0;
    const auto c = eigen_chain(x0, plain_params(cfg.control_eta, cfg.dt), cfg.t, cfg.n, seed,
                               kTagControl, fc);
    rep.set("control_min_ks_p", min_ks_pvalue(a, c, nullptr, ""));
    rep.require("control_rejects", "control_min_ks_p", "<", level);
  }

  if (cfg.sanity_n > 0 && cfg.t > 0.0) {
    std::size_t f1 = 0, f2 = 0;
    const auto s1 = matrix_chain(h0, p, cfg.t, cfg.sanity_n, seed, kTagSanity, f1);
    const auto s2 = matrix_chain(h0, plain_params(cfg.eta, 0.5 * cfg.dt), cfg.t, cfg.sanity_n,
                                 seed, kTagSanity + 1, f2);
    rep.set("dt_halving_min_ks_p", min_ks_pvalue(s1, s2, nullptr, ""));
    rep.require("dt_halving_stable", "dt_halving_min_ks_p", ">", level);
  }
  return rep;
}

}  // namespace hardedge
