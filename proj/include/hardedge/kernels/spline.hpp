#pragma once

#include <span>
#include <vector>

namespace hardedge {

/// Knots of the fundamental spline, stored in decreasing order.
class KnotVector {
 public:
  /// Throws DomainError unless the knots are finite and decreasing with
  /// N >= 2; DegenerateKnots when all knots coincide.
  explicit KnotVector(std::vector<double> knots);

  std::size_t size() const noexcept { return knots_.size(); }
  double operator[](std::size_t i) const { return knots_[i]; }
  std::span<const double> values() const noexcept { return knots_; }
  double front() const { return knots_.front(); }
  double back() const { return knots_.back(); }
  bool distinct() const noexcept;
  /// Knots [first, last) as a new vector.
  KnotVector slice(std::size_t first, std::size_t last) const;

 private:
  std::vector<double> knots_;
};

/// M(y; x) = (N-1) sum_i (x_i - y)_+^{N-2} / prod_{j != i} (x_i - x_j).
/// Evaluated by the normalized B-spline recurrence, which is stable for
/// clustered knots and defined at ties. Right-continuous at the knots.
double spline_m(double y, const KnotVector& knots);

/// Same function through the confluent divided-difference tableau of the
/// truncated power t -> (t - y)_+^{N-2}.
double spline_m_divided_difference(double y, const KnotVector& knots);

/// The explicit sum above. Requires distinct knots (DegenerateKnots otherwise);
/// loses accuracy for clustered knots.
double spline_m_explicit(double y, const KnotVector& knots);

/// order-th derivative by the two-term knot-dropping recursion.
/// OrderTooHigh when order > N-2.
double spline_m_derivative(double y, const KnotVector& knots, int order);

/// Breakpoints of M in increasing order (the distinct knots).
std::vector<double> spline_breakpoints(const KnotVector& knots);

}  // namespace hardedge
