#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace hardedge {

/// A point of the closed positive Weyl chamber: x[0] >= x[1] >= ... >= x[N-1] >= 0.
class OrderedConfig {
 public:
  OrderedConfig() = default;
  /// Validates ordering, finiteness and nonnegativity; throws DomainError.
  explicit OrderedConfig(std::vector<double> values);
  OrderedConfig(std::initializer_list<double> values)
      : OrderedConfig(std::vector<double>(values)) {}

  /// Sorts into decreasing order before validating.
  static OrderedConfig from_unsorted(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  const std::vector<double>& to_vector() const noexcept { return values_; }

  /// Strict ordering and strictly positive coordinates.
  bool strictly_interior() const noexcept;
  double sum() const noexcept;

  friend bool operator==(const OrderedConfig&, const OrderedConfig&) = default;

 private:
  std::vector<double> values_;
};

/// A point of the boundary space: a decreasing nonnegative sequence with an
/// implicit zero tail, together with a mass bound gamma >= sum(xs).
class OmegaPlusPoint {
 public:
  OmegaPlusPoint() = default;
  OmegaPlusPoint(std::vector<double> xs, double gamma);

  std::span<const double> xs() const noexcept { return xs_; }
  double gamma() const noexcept { return gamma_; }
  /// Number of strictly positive atoms.
  std::size_t support_size() const noexcept;
  double atom_mass() const noexcept;

 private:
  std::vector<double> xs_;
  double gamma_ = 0.0;
};

/// Parameters of the N-particle eigenvalue SDE and its step control.
struct SdeParams {
  double eta = 0.0;
  /// false: drift constant 1/2; true: the 1/N-rescaled system, constant 1/(2N).
  bool rescaled = false;
  double dt_max = 1e-3;
  double gap_safety = 0.1;
  double positivity_floor = 1e-300;

  /// Throws ParameterError on violated ranges.
  void validate() const;
};

/// 1e-3 for N <= 64, 1e-3 * 32 / N above.
double default_dt_max(std::size_t n);

/// Saved path of the particle system.
struct Trajectory {
  std::vector<double> times;
  std::vector<OrderedConfig> states;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  SdeParams params;

  /// Throws DomainError if the invariants fail.
  void validate() const;
};

}  // namespace hardedge
