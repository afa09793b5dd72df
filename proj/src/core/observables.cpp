#include "hardedge/core/observables.hpp"

#include <cmath>
#include <string>

#include "hardedge/core/errors.hpp"

namespace hardedge {

namespace {

constexpr double kCoincidenceTol = 1e-13;

void require_strict(const OrderedConfig& config, const char* who) {
  if (!config.strictly_interior())
    throw DomainError(std::string(who) + ": configuration must be strictly ordered and positive");
}

}  // namespace

OmegaPlusPoint embed(const OrderedConfig& config) {
  const double n = static_cast<double>(config.size());
  std::vector<double> xs(config.size());
  double gamma = 0.0;
  for (std::size_t i = 0; i < config.size(); ++i) {
    xs[i] = config[i] / n;
    gamma += xs[i];
  }
  return OmegaPlusPoint(std::move(xs), gamma);
}

double singular_drift(std::size_t i, const OrderedConfig& config) {
  const double xi = config[i];
  double acc = 0.0;
  for (std::size_t j = 0; j < config.size(); ++j) {
    if (j == i) continue;
    const double xj = config[j];
    const double gap = xi - xj;
    if (xi == xj || std::abs(gap) < kCoincidenceTol * std::max(xi, xj))
      throw CoincidentCoordinates("singular_drift: coordinates " + std::to_string(i) + " and " +
                                  std::to_string(j) + " coincide");
    acc += xi * xj / gap;
  }
  return acc;
}

double lyapunov_f(const OrderedConfig& config, std::size_t n) {
  require_strict(config, "lyapunov_f");
  if (n < 1 || n >= config.size()) throw DomainError("lyapunov_f: need 1 <= n <= N-1");
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = n; j < config.size(); ++j) acc -= std::log1p(-config[j] / config[i]);
  return acc;
}

double char_poly_phi(std::size_t i, double z, const OrderedConfig& config) {
  double acc = 1.0;
  for (std::size_t j = 0; j < config.size(); ++j) {
    if (j == i) continue;
    const double f = 1.0 - config[j] * z;
    acc *= f * f;
  }
  return acc;
}

double char_poly_log_derivative(std::size_t i, double z, const OrderedConfig& config) {
  double acc = 0.0;
  for (std::size_t j = 0; j < config.size(); ++j) {
    if (j == i) continue;
    acc += -2.0 * config[j] / (1.0 - config[j] * z);
  }
  return acc;
}

double drift_via_charpoly(std::size_t i, const OrderedConfig& config) {
  require_strict(config, "drift_via_charpoly");
  return -0.5 * char_poly_log_derivative(i, 1.0 / config[i], config);
}

std::complex<double> limit_entire_eplus(std::complex<double> z, const OmegaPlusPoint& omega) {
  std::complex<double> prod = std::exp(-omega.gamma() * z);
  for (double x : omega.xs()) {
    if (x == 0.0) continue;
    prod *= std::exp(x * z) * (1.0 - x * z);
  }
  return prod;
}

std::complex<double> reverse_char_poly(std::complex<double> z, const OmegaPlusPoint& omega) {
  std::complex<double> prod = 1.0;
  for (double x : omega.xs()) prod *= 1.0 - x * z;
  return prod;
}

}  // namespace hardedge
