#include "hardedge/equilibrium/laguerre.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <boost/math/special_functions/gamma.hpp>

#include "hardedge/core/errors.hpp"

namespace hardedge {

OrderedConfig sample_laguerre(std::size_t n, double eta, RandomSource& rng) {
  if (!(eta > -1.0)) throw ParameterError("sample_laguerre: eta must exceed -1");
  if (n == 0) throw ParameterError("sample_laguerre: N must be positive");
  const auto ni = static_cast<Eigen::Index>(n);
  Eigen::VectorXd d2(ni), e2(std::max<Eigen::Index>(ni - 1, 0));
  for (Eigen::Index i = 0; i < ni; ++i) d2[i] = rng.gamma(eta + static_cast<double>(ni - i));
  for (Eigen::Index i = 0; i + 1 < ni; ++i) e2[i] = rng.gamma(static_cast<double>(ni - 1 - i));

  std::vector<double> y(n);
  if (n == 1) {
    y[0] = d2[0];
  } else {
    Eigen::VectorXd diag(ni), sub(ni - 1);
    for (Eigen::Index i = 0; i < ni; ++i) diag[i] = d2[i] + (i > 0 ? e2[i - 1] : 0.0);
    for (Eigen::Index i = 0; i + 1 < ni; ++i) sub[i] = std::sqrt(e2[i] * d2[i]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw EigensolveFailure("sample_laguerre: eigensolve failed");
    for (Eigen::Index i = 0; i < ni; ++i) y[static_cast<std::size_t>(i)] = std::max(es.eigenvalues()[i], 0.0);
  }
  std::sort(y.begin(), y.end(), std::greater<>());
  return OrderedConfig(std::move(y));
}

OrderedConfig invert_coordinates(const OrderedConfig& config) {
  std::vector<double> x(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (!(config[i] > 0.0)) throw DomainError("invert_coordinates: coordinates must be positive");
    x[i] = 1.0 / config[i];
  }
  std::sort(x.begin(), x.end(), std::greater<>());
  return OrderedConfig(std::move(x));
}

OrderedConfig sample_inverse_laguerre(std::size_t n, double eta, RandomSource& rng) {
  return invert_coordinates(sample_laguerre(n, eta, rng));
}

double inverse_gamma_cdf(double shape, double x) {
  if (x <= 0.0) return 0.0;
  return boost::math::gamma_q(shape, 1.0 / x);
}

}  // namespace hardedge
