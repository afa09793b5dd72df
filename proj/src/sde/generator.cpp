#include "hardedge/sde/generator.hpp"

#include <cmath>

#include "hardedge/core/errors.hpp"
#include "hardedge/core/observables.hpp"

namespace hardedge {

double generator_apply(const SmoothFunction& f, const OrderedConfig& config, double eta) {
  if (!config.strictly_interior())
    throw DomainError("generator_apply: configuration must be strictly ordered and positive");
  const auto x = config.values();
  const std::vector<double> g = f.gradient(x);
  const std::vector<double> hd = f.hessian_diagonal(x);
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double drift = -0.5 * eta * x[i] + 0.5 + singular_drift(i, config);
    acc += 0.5 * x[i] * x[i] * hd[i] + drift * g[i];
  }
  return acc;
}

SmoothFunction power_sum(int p) {
  SmoothFunction f;
  f.value = [p](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += std::pow(v, p);
    return s;
  };
  f.gradient = [p](std::span<const double> x) {
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = p * std::pow(x[i], p - 1);
    return g;
  };
  f.hessian_diagonal = [p](std::span<const double> x) {
    std::vector<double> h(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) h[i] = p * (p - 1) * std::pow(x[i], p - 2);
    return h;
  };
  return f;
}

}  // namespace hardedge
