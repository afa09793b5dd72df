#include "hardedge/kernels/spline.hpp"

#include <algorithm>
#include <cmath>

#include "hardedge/core/errors.hpp"

namespace hardedge {

KnotVector::KnotVector(std::vector<double> knots) : knots_(std::move(knots)) {
  if (knots_.size() < 2) throw DomainError("KnotVector: need at least two knots");
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (!std::isfinite(knots_[i])) throw DomainError("KnotVector: knots must be finite");
    if (i > 0 && knots_[i] > knots_[i - 1]) throw DomainError("KnotVector: knots must decrease");
  }
  if (knots_.front() == knots_.back()) throw DegenerateKnots("KnotVector: all knots coincide");
}

bool KnotVector::distinct() const noexcept {
  for (std::size_t i = 1; i < knots_.size(); ++i)
    if (knots_[i] == knots_[i - 1]) return false;
  return true;
}

KnotVector KnotVector::slice(std::size_t first, std::size_t last) const {
  return KnotVector(std::vector<double>(knots_.begin() + static_cast<long>(first),
                                        knots_.begin() + static_cast<long>(last)));
}

double spline_m(double y, const KnotVector& knots) {
  const std::size_t n = knots.size();
  if (y < knots.back() || y >= knots.front()) return 0.0;
  std::vector<double> t(knots.values().rbegin(), knots.values().rend());
  // Order 1: normalized indicators of [t_i, t_{i+1}).
  std::vector<double> m(n - 1, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (t[i] <= y && y < t[i + 1]) m[i] = 1.0 / (t[i + 1] - t[i]);
  for (std::size_t k = 2; k < n; ++k) {
    const double c = static_cast<double>(k) / static_cast<double>(k - 1);
    for (std::size_t i = 0; i + k < n; ++i) {
      const double span = t[i + k] - t[i];
      m[i] = span > 0.0 ? c * ((y - t[i]) * m[i] + (t[i + k] - y) * m[i + 1]) / span : 0.0;
    }
  }
  return m[0];
}

double spline_m_divided_difference(double y, const KnotVector& knots) {
  const std::size_t n = knots.size();
  const int p = static_cast<int>(n) - 2;
  std::vector<double> t(knots.values().rbegin(), knots.values().rend());
  // j-th Taylor coefficient of (s - y)_+^p at s.
  auto taylor = [&](double s, int j) {
    if (s <= y) return 0.0;
    double binom = 1.0;
    for (int r = 0; r < j; ++r) binom = binom * (p - r) / (r + 1);
    return binom * std::pow(s - y, p - j);
  };
  std::vector<double> col(n);
  for (std::size_t i = 0; i < n; ++i) col[i] = taylor(t[i], 0);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i + j < n; ++i) {
      const double span = t[i + j] - t[i];
      col[i] = span > 0.0 ? (col[i + 1] - col[i]) / span : taylor(t[i], static_cast<int>(j));
    }
  }
  return static_cast<double>(n - 1) * col[0];
}

double spline_m_explicit(double y, const KnotVector& knots) {
  if (!knots.distinct()) throw DegenerateKnots("spline_m_explicit: knots must be distinct");
  const std::size_t n = knots.size();
  const int p = static_cast<int>(n) - 2;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = knots[i] - y;
    if (d <= 0.0) continue;
    double denom = 1.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom *= knots[i] - knots[j];
    acc += std::pow(d, p) / denom;
  }
  return static_cast<double>(n - 1) * acc;
}

double spline_m_derivative(double y, const KnotVector& knots, int order) {
  const std::size_t n = knots.size();
  if (order < 0) throw DomainError("spline_m_derivative: negative order");
  if (order > static_cast<int>(n) - 2)
    throw OrderTooHigh("spline_m_derivative: order exceeds N-2");
  if (order == 0) return spline_m(y, knots);
  const double scale = static_cast<double>(n - 1) / (knots.front() - knots.back());
  return scale * (spline_m_derivative(y, knots.slice(1, n), order - 1) -
                  spline_m_derivative(y, knots.slice(0, n - 1), order - 1));
}

std::vector<double> spline_breakpoints(const KnotVector& knots) {
  std::vector<double> b(knots.values().rbegin(), knots.values().rend());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

}  // namespace hardedge
