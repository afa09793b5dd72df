// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: hardedge_acceptance [id ...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hardedge/core/observables.hpp"
#include "hardedge/experiments/ensemble.hpp"
#include "hardedge/experiments/experiments.hpp"
#include "hardedge/experiments/stats.hpp"
#include "hardedge/kernels/corner.hpp"
#include "hardedge/kernels/density.hpp"
#include "hardedge/kernels/spline.hpp"
#include "hardedge/sde/eigen_sde.hpp"
#include "hardedge/sde/generator.hpp"
#include "support.hpp"

using namespace hardedge;
using hardedge::testing::clip_breaks;
using hardedge::testing::piecewise_integral;
using hardedge::testing::random_config;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome from_report(const ExperimentReport& r) {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : r.criteria) {
    os << (first ? "" : "; ") << c.name << (c.pass ? " ok " : " FAILED ") << c.statistic << "="
       << r.statistics.at(c.statistic) << c.comparator << c.threshold;
    first = false;
  }
  return {r.passed(), os.str()};
}

Outcome drift_identity() {
  RandomSource rng(kSeed, 1);
  double worst = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t n = 2 + rng.uniform_index(63);
    const auto x = random_config(rng, n, 0.1, 10.0, 1e-4);
    for (std::size_t i = 0; i < n; ++i) {
      const double a = singular_drift(i, x);
      worst = std::max(worst, std::abs(drift_via_charpoly(i, x) - a) / (1.0 + std::abs(a)));
    }
  }
  return {worst <= 1e-9, "max relative deviation " + fmt("%.3g", worst)};
}

Outcome spline_correctness() {
  RandomSource rng(kSeed, 2);
  double worst_mass = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 2 + rng.uniform_index(11);
    const KnotVector k(random_config(rng, n, 0.0, 4.0, 1e-3).to_vector());
    const double m = piecewise_integral([&](double y) { return spline_m(y, k); }, spline_breakpoints(k));
    worst_mass = std::max(worst_mass, std::abs(m - 1.0));
  }
  const double hat = std::abs(spline_m(1.0, KnotVector({2.0, 1.0, 0.0})) - 1.0);
  double worst_fd = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 3 + rng.uniform_index(10);
    const auto x = random_config(rng, n, 0.0, 4.0, 0.01);
    const KnotVector k(x.to_vector());
    double y;
    bool near;
    do {
      y = x[n - 1] + (x[0] - x[n - 1]) * rng.uniform();
      near = false;
      for (double v : x.values()) near = near || std::abs(v - y) < 1e-4;
    } while (near);
    const double h = 1e-6;
    const double fd = (spline_m(y + h, k) - spline_m(y - h, k)) / (2 * h);
    const double d = spline_m_derivative(y, k, 1);
    worst_fd = std::max(worst_fd, std::abs(fd - d) / (1.0 + std::abs(d)));
  }
  const bool pass = worst_mass <= 1e-8 && hat <= 1e-12 && worst_fd <= 1e-4;
  return {pass, "mass err " + fmt("%.3g", worst_mass) + ", M(1;2,1,0) err " + fmt("%.3g", hat) +
                    ", derivative vs FD " + fmt("%.3g", worst_fd)};
}

Outcome single_point_law() {
  const OrderedConfig x{5.0, 4.0, 3.0, 2.0, 1.0};
  const KnotVector k(x.to_vector());
  const std::size_t n = 100000;
  auto slots = run_replicas<double>(n, [&](std::size_t r) {
    RandomSource rng(kSeed, stream_id(3, r));
    return sample_chain(x, 1, rng)[0];
  });
  std::size_t failed = 0;
  auto v = collect(std::move(slots), failed);
  std::sort(v.begin(), v.end());
  const auto cdf = [&](double y) {
    return piecewise_integral([&](double t) { return spline_m(t, k); }, clip_breaks(x.values(), 1.0, y));
  };
  double d = 0.0;
  const double nn = static_cast<double>(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double f = cdf(v[i]);
    d = std::max({d, std::abs(f - static_cast<double>(i) / nn), std::abs(static_cast<double>(i + 1) / nn - f)});
  }
  return {failed == 0 && d < 0.01, "sup CDF distance " + fmt("%.4f", d)};
}

Outcome corner_trace() {
  bool pass = true;
  std::ostringstream os;
  for (std::size_t n : {2u, 5u, 10u}) {
    std::vector<double> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(static_cast<double>(n - i));
    const OrderedConfig x(xs);
    auto slots = run_replicas<double>(100000, [&](std::size_t r) {
      RandomSource rng(kSeed, stream_id(4, r) ^ (n << 40));
      return sample_corner(x, rng).sum();
    });
    std::size_t failed = 0;
    const auto s = collect(std::move(slots), failed);
    const auto m = mean_estimate(s);
    const double target = static_cast<double>(n - 1) / static_cast<double>(n) * x.sum();
    const double z = std::abs(m.mean - target) / m.se;
    pass = pass && failed == 0 && z < 3.0;
    os << "N=" << n << " |dev|/se=" << fmt("%.2f", z) << " ";
  }
  return {pass, os.str()};
}

Outcome density_vs_sampler() {
  const OrderedConfig x{5.0, 4.0, 3.0, 2.0, 1.0};
  const auto dens = [&](double y1, double y2) {
    if (y1 <= y2) return 0.0;
    return lambda_kn_density(OrderedConfig{y1, y2}, x, 2);
  };
  // Integral of the density over [a,b] x [c,d] intersected with y2 < y1.
  const auto cell = [&](double a, double b, double c, double d) {
    const auto outer = [&](double y1) {
      const double hi = std::min(d, y1);
      if (hi <= c) return 0.0;
      return piecewise_integral([&](double y2) { return dens(y1, y2); }, clip_breaks(x.values(), c, hi));
    };
    auto br = clip_breaks(x.values(), a, b);
    for (double e : {c, d})
      if (e > a && e < b) br.push_back(e);
    std::sort(br.begin(), br.end());
    return piecewise_integral(outer, br);
  };
  const double mass = cell(1.0, 5.0, 1.0, 5.0);

  std::vector<double> edges;
  for (int i = 0; i <= 8; ++i) edges.push_back(1.0 + 0.5 * i);
  const std::size_t nb = edges.size() - 1;
  std::vector<double> probs, counts;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      cells.emplace_back(i, j);
      probs.push_back(cell(edges[i], edges[i + 1], edges[j], edges[j + 1]));
    }
  counts.assign(probs.size(), 0.0);
  const std::size_t n = 100000;
  auto slots = run_replicas<OrderedConfig>(n, [&](std::size_t r) {
    RandomSource rng(kSeed, stream_id(5, r));
    return sample_chain(x, 2, rng);
  });
  std::size_t failed = 0;
  const auto samples = collect(std::move(slots), failed);
  const auto bin = [&](double v) {
    return std::min<std::size_t>(nb - 1, static_cast<std::size_t>((v - 1.0) / 0.5));
  };
  for (const auto& s : samples) {
    const std::size_t i = bin(s[0]), j = bin(s[1]);
    const auto it = std::find(cells.begin(), cells.end(), std::make_pair(i, j));
    counts[static_cast<std::size_t>(it - cells.begin())] += 1.0;
  }
  const auto chi = chi_square_test(counts, probs);
  const bool pass = failed == 0 && std::abs(mass - 1.0) <= 1e-6 && chi.pvalue > 0.01;
  return {pass, "mass " + fmt("%.10f", mass) + ", chi2 " + fmt("%.2f", chi.statistic) + " p=" +
                    fmt("%.3f", chi.pvalue)};
}

Outcome generator_check() {
  const double exact = generator_apply(power_sum(2), OrderedConfig{2.0, 1.0}, 0.0);
  bool pass = std::abs(exact - 12.0) < 1e-12;
  std::ostringstream os;
  os << "Lf(2,1)=" << exact << "; ";
  const OrderedConfig x{3.0, 2.0, 1.0};
  const double delta = 1e-3;
  const auto f = power_sum(2);
  for (double eta : {0.0, 1.0}) {
    SdeParams p;
    p.eta = eta;
    p.dt_max = delta;
    auto slots = run_replicas<double>(100000, [&](std::size_t r) {
      RandomSource rng(kSeed, stream_id(6, r) ^ (static_cast<std::uint64_t>(eta) << 40));
      const auto y = step_eigen_sde(x, p, delta, rng).state;
      return (f.value(y.values()) - f.value(x.values())) / delta;
    });
    std::size_t failed = 0;
    const auto m = mean_estimate(collect(std::move(slots), failed));
    const double lf = generator_apply(f, x, eta);
    const double z = std::abs(m.mean - lf) / m.se;
    pass = pass && failed == 0 && z < 3.0;
    os << "eta=" << eta << " MC " << fmt("%.3f", m.mean) << " vs " << fmt("%.3f", lf) << " (" << fmt("%.2f", z)
       << " se) ";
  }
  return {pass, os.str()};
}

Outcome intertwining() { return from_report(test_intertwining(IntertwiningConfig{}, kSeed)); }

Outcome matrix_eigen() {
  MatrixEigenConfig zero;
  zero.t = 0.0;
  zero.n = 1000;
  zero.negative_control = false;
  zero.sanity_n = 0;
  const auto trivial = test_matrix_eigen_agreement(zero, kSeed);
  auto main = from_report(test_matrix_eigen_agreement(MatrixEigenConfig{}, kSeed));
  main.pass = main.pass && trivial.passed();
  main.detail += std::string("; t=0 ") + (trivial.passed() ? "ok" : "FAILED");
  return main;
}

Outcome equilibrium_one() {
  EquilibriumConfig c;
  c.n_particles = 1;
  c.eta = 1.0;
  c.x0 = {3.0};
  c.t_grid = {20.0};
  c.n = 100000;
  c.dt = 2e-3;
  return from_report(test_equilibrium(c, kSeed));
}

Outcome equilibrium_many() { return from_report(test_equilibrium(EquilibriumConfig{}, kSeed)); }
Outcome collision() {
  const auto r = test_collision_bound(CollisionConfig{}, kSeed);
  auto o = from_report(r);
  const double bound = r.statistics.at("bound");
  o.detail += "; C=" + fmt("%.4f", r.statistics.at("lyapunov_c")) + " bound=" + fmt("%.4f", bound) +
              (bound >= 1.0 ? " (exceeds 1, vacuous at these parameters)" : "");
  return o;
}
Outcome uniform_approx() { return from_report(test_uniform_approx(UniformApproxConfig{}, kSeed)); }
Outcome coupling() { return from_report(test_coupling_l2(CouplingConfig{}, kSeed)); }
Outcome hard_edge() { return from_report(test_hard_edge_density(HardEdgeConfig{}, kSeed)); }

Outcome reproducibility() {
  IntertwiningConfig itw;
  itw.n = 2000;
  itw.sanity_n = 500;
  EquilibriumConfig eq;
  eq.n = 1000;
  eq.sanity_n = 300;
  eq.t_grid = {1.0, 3.0};
  const std::vector<std::pair<std::string, std::function<ExperimentReport()>>> runs{
      {"intertwining", [&] { return test_intertwining(itw, kSeed); }},
      {"equilibrium", [&] { return test_equilibrium(eq, kSeed); }},
      {"coupling", [&] { return test_coupling_l2(CouplingConfig{}, kSeed); }},
      {"hard-edge", [&] {
         HardEdgeConfig h;
         h.n = 500;
         return test_hard_edge_density(h, kSeed);
       }}};
  bool pass = true;
  std::ostringstream os;
  for (const auto& [name, f] : runs) {
    set_thread_count(1);
    const auto a = f().to_json().dump();
    set_thread_count(8);
    const auto b = f().to_json().dump();
    set_thread_count(1);
    const auto c = f().to_json().dump();
    set_thread_count(0);
    const bool same = a == b && a == c;
    pass = pass && same;
    os << name << (same ? " identical " : " DIFFERS ");
  }
  return {pass, os.str() + "(threads 1, 8, 1)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::tuple<int, std::string, std::function<Outcome()>>> criteria{
      {1, "drift identity", drift_identity},
      {2, "spline correctness", spline_correctness},
      {3, "single-point corner law is the spline", single_point_law},
      {4, "corner trace identity", corner_trace},
      {5, "two-point density vs sampler", density_vs_sampler},
      {6, "generator vs one-step mean", generator_check},
      {7, "intertwining", intertwining},
      {8, "matrix vs eigenvalue marginals", matrix_eigen},
      {9, "one-particle equilibrium", equilibrium_one},
      {10, "three-particle equilibrium", equilibrium_many},
      {11, "collision bound uniform in N", collision},
      {12, "uniform approximation", uniform_approx},
      {13, "synchronous coupling decrease", coupling},
      {14, "hard-edge density", hard_edge},
      {15, "reproducibility across thread counts", reproducibility},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::stoi(argv[i]));

  int failures = 0;
  for (const auto& [id, name, run] : criteria) {
    if (!wanted.empty() && !wanted.count(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("%s %2d %s [%.1fs]: %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
