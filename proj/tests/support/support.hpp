#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "hardedge/core/random.hpp"
#include "hardedge/core/types.hpp"

namespace hardedge::testing {

/// Strictly decreasing positive configuration with gaps of at least min_gap.
inline OrderedConfig random_config(RandomSource& rng, std::size_t n, double lo = 0.1,
                                   double hi = 10.0, double min_gap = 1e-3) {
  for (;;) {
    std::vector<double> v(n);
    for (auto& x : v) x = lo + (hi - lo) * rng.uniform();
    std::sort(v.begin(), v.end(), std::greater<>());
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n; ++i) ok = ok && v[i] - v[i + 1] >= min_gap;
    if (ok) return OrderedConfig(v);
  }
}

/// Integral of a piecewise polynomial with the given breakpoints (increasing).
/// 20-point Gauss-Legendre is exact up to degree 39 on every piece.
inline double piecewise_integral(const std::function<double(double)>& f,
                                 const std::vector<double>& breaks) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    if (breaks[i + 1] > breaks[i])
      total += boost::math::quadrature::gauss<double, 20>::integrate(f, breaks[i], breaks[i + 1]);
  return total;
}

/// Sorted breakpoints in [lo, hi]: lo, hi and every knot strictly between.
inline std::vector<double> clip_breaks(std::span<const double> knots, double lo, double hi) {
  std::vector<double> b{lo, hi};
  for (double k : knots)
    if (k > lo && k < hi) b.push_back(k);
  std::sort(b.begin(), b.end());
  return b;
}

}  // namespace hardedge::testing
