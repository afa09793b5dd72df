#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hardedge/core/random.hpp"
#include "hardedge/core/types.hpp"

namespace hardedge {

struct StepReport {
  /// Smallest substep length that was accepted.
  double accepted_dt = 0.0;
  int substeps = 0;
  /// Rejected proposals (each one halves the substep).
  int projections = 0;
};

struct StepResult {
  OrderedConfig state;
  StepReport report;
};

enum class Integrator { eigen, log };

/// Drift constant of the N-particle system: 1/2, or 1/(2N) when rescaled.
double drift_constant(const SdeParams& params, std::size_t n);

/// Euler-Maruyama proposal in natural coordinates for increments dw (already
/// scaled by sqrt(h)). No admissibility check. Throws CoincidentCoordinates.
std::vector<double> euler_update(std::span<const double> x, const SdeParams& params, double h,
                                 std::span<const double> dw);

/// Same proposal in log coordinates, mapped back by exp.
std::vector<double> log_euler_update(std::span<const double> x, const SdeParams& params,
                                     double h, std::span<const double> dw);

/// Step admissibility: every gap exceeds gap_safety times the old gap, the
/// last particle stays above the positivity floor, and all values are finite.
bool step_admissible(std::span<const double> old_x, std::span<const double> new_x,
                     const SdeParams& params);

/// One step of length dt with adaptive halving on rejection. Rejected
/// proposals are discarded and the remaining time is covered with fresh
/// variates at the halved length. Throws StepFailure below 1e-12 * dt_max.
StepResult step_eigen_sde(const OrderedConfig& state, const SdeParams& params, double dt,
                          RandomSource& rng);

StepResult step_log_sde(const OrderedConfig& state, const SdeParams& params, double dt,
                        RandomSource& rng);

/// Integrates from `initial` with steps of params.dt_max and records the
/// state at each save time (t = 0 is always recorded first). StepFailure is
/// rethrown with the failing time attached.
Trajectory simulate(const OrderedConfig& initial, const SdeParams& params, double horizon,
                    std::vector<double> save_times, RandomSource& rng,
                    Integrator integrator = Integrator::eigen);

/// In-place integration over [0, t] in steps of params.dt_max. The ensemble
/// hot path: no per-step allocation and no per-step validation.
void advance(std::vector<double>& x, const SdeParams& params, double t, RandomSource& rng,
             Integrator integrator = Integrator::eigen);

/// Advances the state to time t (no intermediate saves).
OrderedConfig evolve(const OrderedConfig& initial, const SdeParams& params, double t,
                     RandomSource& rng, Integrator integrator = Integrator::eigen);

/// Euler step of dz = z dw + ((1 - eta/2 - N) z + 1/2) dt, clipped at 0.
double step_1d(double x, std::size_t n, double eta, double dt, RandomSource& rng);

}  // namespace hardedge
