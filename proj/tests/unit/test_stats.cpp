#include <doctest.h>

#include <cmath>

#include "hardedge/core/errors.hpp"
#include "hardedge/experiments/energy.hpp"
#include "hardedge/experiments/ensemble.hpp"
#include "hardedge/experiments/stats.hpp"

using namespace hardedge;

namespace {

SampleSet cloud(std::size_t n, std::size_t d, std::uint64_t stream, double shift = 0.0) {
  RandomSource rng(51, stream);
  SampleSet s(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < s.rows(); ++i)
    for (Eigen::Index j = 0; j < s.cols(); ++j) s(i, j) = rng.normal() + (j == 0 ? shift : 0.0);
  return s;
}

}  // namespace

TEST_CASE("mean estimate") {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  const auto m = mean_estimate(v);
  CHECK(m.mean == 2.5);
  CHECK(m.se == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
  CHECK(m.n == 4);
  CHECK_THROWS_AS(mean_estimate(std::vector<double>{}), EmptySample);
}

TEST_CASE("kolmogorov tail") {
  CHECK(kolmogorov_pvalue(0.0, 100) == 1.0);
  // Q_KS(1.36) is about 0.049
  CHECK(kolmogorov_pvalue(1.36 / std::sqrt(1e6), 1e6) == doctest::Approx(0.049).epsilon(0.02));
  CHECK(kolmogorov_pvalue(0.5, 1000) < 1e-10);
}

TEST_CASE("ks tests") {
  std::vector<double> u;
  RandomSource rng(52, 0);
  for (int i = 0; i < 5000; ++i) u.push_back(rng.uniform());
  CHECK(ks_one_sample(u, [](double x) { return std::clamp(x, 0.0, 1.0); }).pvalue > 0.01);
  CHECK(ks_one_sample(u, [](double x) { return std::clamp(x * x, 0.0, 1.0); }).pvalue < 1e-6);
  const auto same = ks_two_sample(u, u);
  CHECK(same.statistic == 0.0);
  CHECK(same.pvalue == 1.0);
  CHECK_THROWS_AS(ks_two_sample({}, u), EmptySample);
}

TEST_CASE("chi square") {
  // two degrees of freedom: Q = exp(-s/2)
  CHECK(chi_square_pvalue(3.0, 2.0) == doctest::Approx(std::exp(-1.5)));
  const std::vector<double> obs{25, 25, 25, 25};
  const std::vector<double> p{0.25, 0.25, 0.25, 0.25};
  const auto r = chi_square_test(obs, p);
  CHECK(r.statistic == 0.0);
  CHECK(r.pvalue == doctest::Approx(1.0));
  // sparse cells are pooled
  const std::vector<double> obs2{50, 48, 1, 1};
  const std::vector<double> p2{0.5, 0.48, 0.01, 0.01};
  CHECK(chi_square_test(obs2, p2).pvalue > 0.5);
}

TEST_CASE("energy distance examples") {
  const auto a = cloud(300, 2, 1);
  CHECK(energy_distance(a, a) == doctest::Approx(0.0).scale(1.0));
  CHECK(energy_distance(a, cloud(300, 2, 2, 5.0)) > 1.0);
  CHECK_THROWS_AS(energy_distance(SampleSet(0, 2), a), EmptySample);
  CHECK_THROWS_AS(energy_distance(cloud(10, 3, 3), a), DomainError);
  RandomSource rng(1, 0);
  CHECK_THROWS_AS(energy_permutation_test(a, a, 100, rng), ParameterError);
}

TEST_CASE("energy permutation test has power") {
  RandomSource rng(53, 0);
  CHECK(energy_permutation_test(cloud(200, 3, 4), cloud(200, 3, 5, 5.0), 200, rng).pvalue < 0.01);
  CHECK(energy_permutation_test(cloud(500, 1, 4), cloud(500, 1, 5, 0.5), 200, rng).pvalue < 0.01);
}

TEST_CASE("energy permutation test is calibrated under the null") {
  for (std::size_t d : {1u, 2u}) {
    int pass = 0;
    for (std::uint64_t rep = 0; rep < 100; ++rep) {
      RandomSource rng(54, rep);
      pass += energy_permutation_test(cloud(1000, d, 2 * rep + 100), cloud(1000, d, 2 * rep + 101), 200, rng)
                      .pvalue > 0.01;
    }
    CHECK(pass >= 98);
  }
}

TEST_CASE("ks two sample is calibrated under the null") {
  int pass = 0;
  for (std::uint64_t rep = 0; rep < 100; ++rep) {
    const auto a = cloud(2000, 1, 2 * rep + 300), b = cloud(2000, 1, 2 * rep + 301);
    std::vector<double> va(a.data(), a.data() + a.size()), vb(b.data(), b.data() + b.size());
    pass += ks_two_sample(va, vb).pvalue > 0.01;
  }
  CHECK(pass >= 98);
}

TEST_CASE("blocked and serial energy tests agree") {
  for (std::size_t d : {1u, 3u}) {
    for (std::size_t n : {50u, 300u, 700u}) {
      const auto a = cloud(n, d, 7), b = cloud(n + 37, d, 8, 0.2);
      RandomSource r1(55, n), r2(55, n);
      const auto p = energy_permutation_test(a, b, 200, r1);
      const auto s = energy_permutation_test_serial(a, b, 200, r2);
      CHECK(p.statistic == doctest::Approx(s.statistic).epsilon(1e-10));
      CHECK(p.pvalue == s.pvalue);
      CHECK(p.statistic == doctest::Approx(energy_distance(a, b)).epsilon(1e-10));
    }
  }
}

TEST_CASE("energy test does not depend on the thread count") {
  const auto a = cloud(900, 2, 9), b = cloud(800, 2, 10, 0.1);
  set_thread_count(1);
  RandomSource r1(56, 0);
  const auto one = energy_permutation_test(a, b, 200, r1);
  set_thread_count(4);
  RandomSource r2(56, 0);
  const auto four = energy_permutation_test(a, b, 200, r2);
  set_thread_count(0);
  CHECK(one.statistic == four.statistic);
  CHECK(one.pvalue == four.pvalue);
}
