#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hardedge/core/types.hpp"
#include "hardedge/sde/eigen_sde.hpp"

namespace hardedge {

/// A family of Brownian paths W_i on a fixed grid of step dt, addressable by
/// (coordinate i, step k). Each step can be refined by dyadic bisection; the
/// midpoints are Brownian-bridge draws keyed by their position in the
/// bisection tree, so every system driven by the sheet sees the same path no
/// matter how finely it refines.
class BrownianSheet {
 public:
  BrownianSheet(std::uint64_t seed, double dt);

  double dt() const noexcept { return dt_; }

  /// Increment of W_i over the sub-interval `node` of step k. Node 1 is the
  /// whole step; node m has children 2m and 2m+1.
  double increment(std::uint64_t i, std::uint64_t k, std::uint64_t node) const;

 private:
  std::uint64_t seed_;
  double dt_;
};

/// Advances x over grid step k using the sheet's increments for coordinates
/// 0..N-1. A rejected proposal bisects the interval along the sheet's bridge.
/// Throws StepFailure when the refinement depth exceeds max_depth.
StepReport step_on_sheet(std::vector<double>& x, const SdeParams& params, const BrownianSheet& sheet,
                         std::uint64_t k, Integrator integrator, int max_depth = 40);

}  // namespace hardedge
