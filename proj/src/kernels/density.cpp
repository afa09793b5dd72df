#include "hardedge/kernels/density.hpp"

#include <cmath>
#include <iostream>

#include <Eigen/Dense>

#include "hardedge/core/errors.hpp"
#include "hardedge/core/random.hpp"
#include "hardedge/kernels/corner.hpp"
#include "hardedge/kernels/spline.hpp"

namespace hardedge {

namespace {

double box_estimate(const OrderedConfig& y, const OrderedConfig& x, std::size_t k) {
  constexpr std::size_t kSamples = 100000;
  RandomSource rng(0x5eedu, 0);
  const double h = 0.02 * (x[0] - x[x.size() - 1]);
  std::size_t hits = 0;
  for (std::size_t s = 0; s < kSamples; ++s) {
    const OrderedConfig z = sample_chain(x, k, rng);
    bool in = true;
    for (std::size_t i = 0; i < k && in; ++i) in = std::abs(z[i] - y[i]) <= h;
    hits += in;
  }
  return static_cast<double>(hits) / kSamples / std::pow(2.0 * h, static_cast<double>(k));
}

}  // namespace

double vandermonde(std::span<const double> v) {
  double acc = 1.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) acc *= v[i] - v[j];
  return acc;
}

double lambda_kn_density(const OrderedConfig& y, const OrderedConfig& x, std::size_t k) {
  const std::size_t n = x.size();
  if (k < 1 || k >= n) throw DomainError("lambda_kn_density: need 1 <= K < N");
  if (y.size() != k) throw DomainError("lambda_kn_density: y must have length K");
  for (std::size_t i = 1; i < n; ++i)
    if (!(x[i - 1] > x[i])) throw DomainError("lambda_kn_density: x must be strictly decreasing");

  if (n > kDensityMaxN || k > kDensityMaxK) {
    std::cerr << "warning: lambda_kn_density outside N <= 30, K <= 6; using a Monte Carlo estimate\n";
    return box_estimate(y, x, k);
  }

  const double width = x[0] - x[n - 1];
  double denom = 1.0;
  double cond = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + n - k + 1; j < n; ++j) {
      denom *= x[i] - x[j];
      cond *= width / (x[i] - x[j]);
    }
  if (cond > 1e12) throw NumericalInstability("lambda_kn_density: denominator condition exceeds 1e12");

  const KnotVector knots(x.to_vector());
  const auto ki = static_cast<Eigen::Index>(k);
  Eigen::MatrixXd m(ki, ki);
  for (std::size_t i = 0; i < k; ++i) {
    const KnotVector window = knots.slice(k - 1 - i, n - i);
    for (std::size_t j = 0; j < k; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = spline_m(y[k - 1 - j], window);
  }

  double prefactor = 1.0;
  for (std::size_t l = 1; l < k; ++l) {
    // binom(N-K+l, l)
    double b = 1.0;
    for (std::size_t r = 1; r <= l; ++r) b = b * static_cast<double>(n - k + r) / static_cast<double>(r);
    prefactor *= b;
  }
  const double value = prefactor * m.determinant() / denom * vandermonde(y.values());
  return std::max(0.0, value);
}

double corner_density(const OrderedConfig& y, const OrderedConfig& x) {
  const std::size_t n = x.size();
  if (y.size() + 1 != n) throw DomainError("corner_density: y must have length N-1");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (y[i] > x[i] || y[i] < x[i + 1]) return 0.0;
  double fact = 1.0;
  for (std::size_t r = 2; r < n; ++r) fact *= static_cast<double>(r);
  return fact * vandermonde(y.values()) / vandermonde(x.values());
}

}  // namespace hardedge
