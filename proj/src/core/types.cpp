#include "hardedge/core/types.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "hardedge/core/errors.hpp"

namespace hardedge {

OrderedConfig::OrderedConfig(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("OrderedConfig: needs at least one coordinate");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!std::isfinite(v)) throw DomainError("OrderedConfig: non-finite coordinate " + std::to_string(i));
    if (v < 0.0) throw DomainError("OrderedConfig: negative coordinate " + std::to_string(i));
    if (i > 0 && v > values_[i - 1])
      throw DomainError("OrderedConfig: coordinates not decreasing at " + std::to_string(i));
  }
}

OrderedConfig OrderedConfig::from_unsorted(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return OrderedConfig(std::move(values));
}

bool OrderedConfig::strictly_interior() const noexcept {
  for (std::size_t i = 0; i + 1 < values_.size(); ++i)
    if (!(values_[i] > values_[i + 1])) return false;
  return values_.back() > 0.0;
}

double OrderedConfig::sum() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

OmegaPlusPoint::OmegaPlusPoint(std::vector<double> xs, double gamma)
    : xs_(std::move(xs)), gamma_(gamma) {
  if (!std::isfinite(gamma_) || gamma_ < 0.0) throw DomainError("OmegaPlusPoint: gamma must be >= 0");
  double total = 0.0;
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    const double v = xs_[i];
    if (!std::isfinite(v) || v < 0.0) throw DomainError("OmegaPlusPoint: invalid atom " + std::to_string(i));
    if (i > 0 && v > xs_[i - 1]) throw DomainError("OmegaPlusPoint: atoms not decreasing");
    total += v;
  }
  if (total > gamma_ * (1.0 + 1e-12) + 1e-300)
    throw DomainError("OmegaPlusPoint: sum of atoms exceeds gamma");
}

std::size_t OmegaPlusPoint::support_size() const noexcept {
  return static_cast<std::size_t>(std::count_if(xs_.begin(), xs_.end(), [](double v) { return v > 0.0; }));
}

double OmegaPlusPoint::atom_mass() const noexcept {
  return std::accumulate(xs_.begin(), xs_.end(), 0.0);
}

void SdeParams::validate() const {
  if (!std::isfinite(eta)) throw ParameterError("SdeParams: eta must be finite");
  if (!(dt_max > 0.0)) throw ParameterError("SdeParams: dt_max must be > 0");
  if (!(gap_safety > 0.0 && gap_safety < 1.0)) throw ParameterError("SdeParams: gap_safety must lie in (0,1)");
  if (!(positivity_floor > 0.0)) throw ParameterError("SdeParams: positivity_floor must be > 0");
}

double default_dt_max(std::size_t n) {
  return n <= 64 ? 1e-3 : 1e-3 * 32.0 / static_cast<double>(n);
}

void Trajectory::validate() const {
  if (times.size() != states.size()) throw DomainError("Trajectory: times/states length mismatch");
  if (times.empty()) return;
  if (times.front() != 0.0) throw DomainError("Trajectory: first time must be 0");
  for (std::size_t k = 1; k < times.size(); ++k)
    if (!(times[k] > times[k - 1])) throw DomainError("Trajectory: times not strictly increasing");
  const std::size_t n = states.front().size();
  for (const auto& s : states)
    if (s.size() != n) throw DomainError("Trajectory: states do not share one N");
}

}  // namespace hardedge
