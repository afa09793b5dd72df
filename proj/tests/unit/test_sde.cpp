#include <doctest.h>

#include <cmath>

#include "hardedge/core/errors.hpp"
#include "hardedge/experiments/stats.hpp"
#include "hardedge/sde/eigen_sde.hpp"
#include "hardedge/sde/generator.hpp"
#include "hardedge/sde/matrix_sde.hpp"
#include "support.hpp"

using namespace hardedge;

namespace {

SdeParams params_with(double eta, double dt, bool rescaled = false) {
  SdeParams p;
  p.eta = eta;
  p.dt_max = dt;
  p.rescaled = rescaled;
  return p;
}

}  // namespace

TEST_CASE("generator examples") {
  const OrderedConfig x{2.0, 1.0};
  CHECK(generator_apply(power_sum(1), x, 0.0) == doctest::Approx(1.0));
  CHECK(generator_apply(power_sum(2), x, 0.0) == doctest::Approx(12.0));
  const SmoothFunction constant{
      [](std::span<const double>) { return 3.0; },
      [](std::span<const double> v) { return std::vector<double>(v.size(), 0.0); },
      [](std::span<const double> v) { return std::vector<double>(v.size(), 0.0); }};
  CHECK(generator_apply(constant, OrderedConfig{3.0, 2.0, 1.0}, 0.7) == 0.0);
  // L sum x_i = N/2 - eta/2 sum x_i
  CHECK(generator_apply(power_sum(1), OrderedConfig{3.0, 2.0, 1.0}, 1.0) == doctest::Approx(1.5 - 3.0));
  CHECK_THROWS_AS(generator_apply(power_sum(1), OrderedConfig{2.0, 0.0}, 0.0), DomainError);
}

TEST_CASE("drift constant") {
  CHECK(drift_constant(params_with(0, 1e-3), 4) == 0.5);
  CHECK(drift_constant(params_with(0, 1e-3, true), 4) == 0.125);
  CHECK(default_dt_max(10) == 1e-3);
  CHECK(default_dt_max(128) == doctest::Approx(2.5e-4));
}

TEST_CASE("sde params validation") {
  SdeParams p;
  p.dt_max = 0.0;
  CHECK_THROWS_AS(p.validate(), ParameterError);
  p = SdeParams{};
  p.gap_safety = 1.0;
  CHECK_THROWS_AS(p.validate(), ParameterError);
}

TEST_CASE("diffusion part of the Euler update scales with the configuration") {
  RandomSource rng(3, 0);
  const auto p = params_with(0.7, 1e-3);
  for (int rep = 0; rep < 100; ++rep) {
    const auto x = hardedge::testing::random_config(rng, 5, 0.5, 5.0, 0.05);
    const double c = 0.5 + 2.0 * rng.uniform();
    std::vector<double> cx;
    for (double v : x.values()) cx.push_back(c * v);
    std::vector<double> dw(5), zero(5, 0.0);
    for (auto& w : dw) w = std::sqrt(1e-3) * rng.normal();
    const auto a = euler_update(x.values(), p, 1e-3, dw);
    const auto a0 = euler_update(x.values(), p, 1e-3, zero);
    const auto b = euler_update(cx, p, 1e-3, dw);
    const auto b0 = euler_update(cx, p, 1e-3, zero);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK((b[i] - b0[i]) == doctest::Approx(c * (a[i] - a0[i])).epsilon(1e-12));
      CHECK((a[i] - a0[i]) == doctest::Approx(x[i] * dw[i]).epsilon(1e-12));
    }
    // The interaction and eta drift are linear in x; the constant is not.
    for (std::size_t i = 0; i < 5; ++i)
      CHECK(b0[i] - c * x[i] - (c * (a0[i] - x[i] - 0.5e-3)) - 0.5e-3 ==
            doctest::Approx(0.0).epsilon(1e-12).scale(c * x[i]));
  }
}

TEST_CASE("step admissibility") {
  const auto p = params_with(0, 1e-3);
  const std::vector<double> old{3.0, 2.0, 1.0};
  CHECK(step_admissible(old, std::vector<double>{3.0, 2.0, 1.0}, p));
  CHECK_FALSE(step_admissible(old, std::vector<double>{3.0, 2.95, 1.0}, p));
  CHECK_FALSE(step_admissible(old, std::vector<double>{3.0, 2.0, 0.0}, p));
  CHECK_FALSE(step_admissible(old, std::vector<double>{3.0, std::nan(""), 1.0}, p));
}

TEST_CASE("simulated paths stay strictly ordered and positive") {
  for (auto integ : {Integrator::eigen, Integrator::log}) {
    for (std::uint64_t s = 0; s < 20; ++s) {
      RandomSource rng(4, s);
      const auto traj = simulate(OrderedConfig{1.0, 0.9, 0.1, 0.01}, params_with(0.0, 1e-3), 1.0,
                                 {0.1, 0.5, 1.0}, rng, integ);
      CHECK_NOTHROW(traj.validate());
      REQUIRE(traj.times.size() == 4);
      CHECK(traj.times.front() == 0.0);
      for (const auto& st : traj.states) CHECK(st.strictly_interior());
    }
  }
}

TEST_CASE("simulate validates save times") {
  RandomSource rng(1, 0);
  CHECK_THROWS(simulate(OrderedConfig{2.0, 1.0}, params_with(0, 1e-3), 1.0, {0.5, 0.2}, rng));
  CHECK_THROWS(simulate(OrderedConfig{2.0, 1.0}, params_with(0, 1e-3), 1.0, {2.0}, rng));
}

TEST_CASE("zero noise turns simulate into a deterministic ODE solver") {
  auto r1 = RandomSource::zero_noise();
  auto r2 = RandomSource::zero_noise();
  const auto a = simulate(OrderedConfig{3.0, 2.0, 1.0}, params_with(1.0, 1e-3), 2.0, {1.0, 2.0}, r1);
  const auto b = simulate(OrderedConfig{3.0, 2.0, 1.0}, params_with(1.0, 1e-3), 2.0, {1.0, 2.0}, r2);
  CHECK(a.states == b.states);
  // N = 1 ODE: dx = (-eta/2 x + 1/2) dt has fixed point 1/eta
  auto r3 = RandomSource::zero_noise();
  const auto c = simulate(OrderedConfig{3.0}, params_with(1.0, 1e-3), 30.0, {30.0}, r3);
  CHECK(c.states.back()[0] == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("steps report their substeps") {
  RandomSource rng(6, 0);
  const auto r = step_eigen_sde(OrderedConfig{3.0, 2.0, 1.0}, params_with(0, 1e-3), 1e-3, rng);
  CHECK(r.report.substeps >= 1);
  CHECK(r.report.accepted_dt <= 1e-3);
  CHECK(r.state.strictly_interior());
  // nearly colliding pair forces halving
  int projections = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    RandomSource rr(7, s);
    projections += step_eigen_sde(OrderedConfig{1.0, 1.0 - 1e-4, 0.5}, params_with(0, 1e-2), 1e-2, rr)
                       .report.projections;
  }
  CHECK(projections > 0);
}

TEST_CASE("advance and evolve agree") {
  RandomSource a(8, 3), b(8, 3);
  std::vector<double> x{3.0, 2.0, 1.0};
  advance(x, params_with(0.5, 1e-3), 0.3, a);
  const auto y = evolve(OrderedConfig{3.0, 2.0, 1.0}, params_with(0.5, 1e-3), 0.3, b);
  CHECK(x == y.to_vector());
}

TEST_CASE("one dimensional diffusion stays nonnegative") {
  RandomSource rng(5, 0);
  double z = 0.01;
  for (int k = 0; k < 10000; ++k) {
    z = step_1d(z, 3, 0.0, 1e-2, rng);
    CHECK(z >= 0.0);
  }
}

TEST_CASE("hermitian state") {
  Eigen::MatrixXcd m(2, 2);
  m << 2.0, std::complex<double>(0, 1), std::complex<double>(0, -1), 1.0;
  CHECK_NOTHROW(HermitianState{m});
  Eigen::MatrixXcd bad = m;
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(HermitianState{bad}, DomainError);
  CHECK_THROWS_AS(HermitianState{Eigen::MatrixXcd(2, 3)}, DomainError);
  const auto d = HermitianState::diagonal(OrderedConfig{3.0, 2.0, 1.0});
  CHECK(d.trace() == 6.0);
  CHECK(eigenvalues(d).to_vector() == std::vector<double>{3.0, 2.0, 1.0});
  const auto e = eigenvalues(HermitianState{m});
  CHECK(e[0] + e[1] == doctest::Approx(3.0));
  CHECK(e[0] * e[1] == doctest::Approx(1.0));
}

TEST_CASE("matrix chain at time zero is the identity and steps stay positive") {
  RandomSource rng(2, 0);
  const auto h0 = HermitianState::diagonal(OrderedConfig{3.0, 2.0, 1.0});
  CHECK(eigenvalues(evolve_matrix(h0, params_with(0, 1e-3), 0.0, rng)).to_vector() ==
        std::vector<double>{3.0, 2.0, 1.0});
  auto h = HermitianState::diagonal(OrderedConfig{0.3, 0.01, 0.0});
  for (int k = 0; k < 2000; ++k) {
    h = step_matrix_sde(h, params_with(0, 1e-2), 1e-2, rng);
    const auto ev = eigenvalues(h);
    CHECK(ev[2] >= 0.0);
  }
}

TEST_CASE("matrix chain mean trace follows its linear ODE") {
  // d E[Tr H] = (-(eta/2) Tr H + N/2) dt for the plain drift.
  const double eta = 1.0, t = 0.5;
  const int n = 4000;
  std::vector<double> tr;
  for (int r = 0; r < n; ++r) {
    RandomSource rng(12, static_cast<std::uint64_t>(r));
    tr.push_back(evolve_matrix(HermitianState::diagonal(OrderedConfig{3.0, 2.0, 1.0}),
                               params_with(eta, 1e-3), t, rng)
                     .trace());
  }
  const auto m = mean_estimate(tr);
  const double exact = 3.0 / eta + (6.0 - 3.0 / eta) * std::exp(-eta * t / 2);
  CHECK(std::abs(m.mean - exact) < 4.0 * m.se + 1e-2);
}

TEST_CASE("one step mean matches the generator") {
  // (E f(X_h) - f(x)) / h against L f for f = sum x^2.
  const OrderedConfig x{3.0, 2.0, 1.0};
  const double h = 1e-3;
  const int n = 20000;
  std::vector<double> inc;
  const auto f = power_sum(2);
  for (int r = 0; r < n; ++r) {
    RandomSource rng(13, static_cast<std::uint64_t>(r));
    const auto y = step_eigen_sde(x, params_with(1.0, h), h, rng).state;
    inc.push_back((f.value(y.values()) - f.value(x.values())) / h);
  }
  const auto m = mean_estimate(inc);
  CHECK(std::abs(m.mean - generator_apply(f, x, 1.0)) < 4.0 * m.se);
}
