#include "hardedge/sde/eigen_sde.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardedge/core/errors.hpp"

namespace hardedge {

namespace {

constexpr double kCoincidenceTol = 1e-13;

// out[i] = sum_{j != i} x_j / (x_i - x_j); multiply by x_i for the natural drift.
void interaction_ratios(std::span<const double> x, std::span<double> out) {
  const std::size_t n = x.size();
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double gap = x[i] - x[j];
      if (!(gap > kCoincidenceTol * std::max(x[i], x[j])))
        throw CoincidentCoordinates("interaction drift: coordinates " + std::to_string(i) +
                                    " and " + std::to_string(j) + " coincide");
      const double inv = 1.0 / gap;
      out[i] += x[j] * inv;
      out[j] -= x[i] * inv;
    }
  }
}

void euler_into(std::span<const double> x, const SdeParams& params, double h,
                std::span<const double> dw, std::span<double> r, std::span<double> out) {
  const std::size_t n = x.size();
  const double c = drift_constant(params, n);
  interaction_ratios(x, r);
  for (std::size_t i = 0; i < n; ++i) {
    const double drift = -0.5 * params.eta * x[i] + c + x[i] * r[i];
    out[i] = x[i] + x[i] * dw[i] + drift * h;
  }
}

void log_euler_into(std::span<const double> x, const SdeParams& params, double h,
                    std::span<const double> dw, std::span<double> r, std::span<double> out) {
  const std::size_t n = x.size();
  const double c = drift_constant(params, n);
  interaction_ratios(x, r);
  for (std::size_t i = 0; i < n; ++i) {
    const double drift = -0.5 * (1.0 + params.eta) + c / x[i] + r[i];
    out[i] = x[i] * std::exp(dw[i] + drift * h);
  }
}

struct Scratch {
  std::vector<double> dw, r, prop;
  void resize(std::size_t n) {
    dw.resize(n);
    r.resize(n);
    prop.resize(n);
  }
};

// Advances x in place over dt; returns the report.
StepReport adaptive_inplace(std::vector<double>& x, const SdeParams& params, double dt,
                            RandomSource& rng, Integrator integrator, Scratch& s) {
  const std::size_t n = x.size();
  s.resize(n);
  const double h_min = 1e-12 * params.dt_max;
  StepReport rep;
  rep.accepted_dt = dt;
  double remaining = dt;
  double h = dt;
  while (remaining > 0.0) {
    h = std::min(h, remaining);
    const double sq = std::sqrt(h);
    for (auto& w : s.dw) w = sq * rng.normal();
    bool ok = false;
    try {
      if (integrator == Integrator::log)
        log_euler_into(x, params, h, s.dw, s.r, s.prop);
      else
        euler_into(x, params, h, s.dw, s.r, s.prop);
      ok = step_admissible(x, s.prop, params);
    } catch (const CoincidentCoordinates&) {
      ok = false;
    }
    if (ok) {
      x.swap(s.prop);
      // Guard against a tail of rounding residue.
      remaining = (remaining - h <= 1e-15 * dt) ? 0.0 : remaining - h;
      rep.accepted_dt = std::min(rep.accepted_dt, h);
      ++rep.substeps;
    } else {
      ++rep.projections;
      h *= 0.5;
      if (h < h_min) throw StepFailure("step: halving fell below 1e-12 * dt_max");
    }
  }
  return rep;
}

StepResult adaptive_step(const OrderedConfig& state, const SdeParams& params, double dt,
                         RandomSource& rng, Integrator integrator) {
  if (!(dt > 0.0)) throw ParameterError("step: dt must be positive");
  if (!state.strictly_interior())
    throw DomainError("step: state must be strictly ordered and positive");
  std::vector<double> x = state.to_vector();
  Scratch s;
  const StepReport rep = adaptive_inplace(x, params, dt, rng, integrator, s);
  return {OrderedConfig(std::move(x)), rep};
}

}  // namespace

double drift_constant(const SdeParams& params, std::size_t n) {
  return params.rescaled ? 0.5 / static_cast<double>(n) : 0.5;
}

std::vector<double> euler_update(std::span<const double> x, const SdeParams& params, double h,
                                 std::span<const double> dw) {
  std::vector<double> r(x.size()), out(x.size());
  euler_into(x, params, h, dw, r, out);
  return out;
}

std::vector<double> log_euler_update(std::span<const double> x, const SdeParams& params,
                                     double h, std::span<const double> dw) {
  std::vector<double> r(x.size()), out(x.size());
  log_euler_into(x, params, h, dw, r, out);
  return out;
}

bool step_admissible(std::span<const double> old_x, std::span<const double> new_x,
                     const SdeParams& params) {
  const std::size_t n = new_x.size();
  for (double v : new_x)
    if (!std::isfinite(v)) return false;
  if (!(new_x[n - 1] > params.positivity_floor)) return false;
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(new_x[i] - new_x[i + 1] > params.gap_safety * (old_x[i] - old_x[i + 1]))) return false;
  return true;
}

StepResult step_eigen_sde(const OrderedConfig& state, const SdeParams& params, double dt,
                          RandomSource& rng) {
  return adaptive_step(state, params, dt, rng, Integrator::eigen);
}

StepResult step_log_sde(const OrderedConfig& state, const SdeParams& params, double dt,
                        RandomSource& rng) {
  return adaptive_step(state, params, dt, rng, Integrator::log);
}

Trajectory simulate(const OrderedConfig& initial, const SdeParams& params, double horizon,
                    std::vector<double> save_times, RandomSource& rng, Integrator integrator) {
  params.validate();
  if (!(horizon >= 0.0)) throw ParameterError("simulate: horizon must be nonnegative");
  for (std::size_t k = 0; k < save_times.size(); ++k) {
    if (save_times[k] < 0.0 || save_times[k] > horizon)
      throw ParameterError("simulate: save time outside [0, horizon]");
    if (k > 0 && !(save_times[k] > save_times[k - 1]))
      throw ParameterError("simulate: save times must be increasing");
  }
  if (save_times.empty() || save_times.front() != 0.0) save_times.insert(save_times.begin(), 0.0);

  Trajectory traj;
  traj.seed = rng.master_seed();
  traj.stream = rng.stream();
  traj.params = params;
  traj.times.push_back(0.0);
  traj.states.push_back(initial);

  if (!initial.strictly_interior())
    throw DomainError("simulate: initial state must be strictly ordered and positive");
  std::vector<double> x = initial.to_vector();
  Scratch scratch;
  double t = 0.0;
  for (std::size_t k = 1; k < save_times.size(); ++k) {
    const double target = save_times[k];
    while (t < target) {
      const double h = std::min(params.dt_max, target - t);
      try {
        adaptive_inplace(x, params, h, rng, integrator, scratch);
      } catch (const StepFailure& e) {
        throw StepFailure(e.what(), t);
      }
      t = (target - t - h <= 1e-12 * params.dt_max) ? target : t + h;
    }
    traj.times.push_back(target);
    traj.states.emplace_back(x);
  }
  return traj;
}

void advance(std::vector<double>& x, const SdeParams& params, double t, RandomSource& rng,
             Integrator integrator) {
  Scratch scratch;
  double s = 0.0;
  while (s < t) {
    const double h = std::min(params.dt_max, t - s);
    try {
      adaptive_inplace(x, params, h, rng, integrator, scratch);
    } catch (const StepFailure& e) {
      throw StepFailure(e.what(), s);
    }
    s = (t - s - h <= 1e-12 * params.dt_max) ? t : s + h;
  }
}

OrderedConfig evolve(const OrderedConfig& initial, const SdeParams& params, double t,
                     RandomSource& rng, Integrator integrator) {
  params.validate();
  if (!initial.strictly_interior())
    throw DomainError("evolve: initial state must be strictly ordered and positive");
  std::vector<double> x = initial.to_vector();
  advance(x, params, t, rng, integrator);
  return OrderedConfig(std::move(x));
}

double step_1d(double x, std::size_t n, double eta, double dt, RandomSource& rng) {
  if (x < 0.0) throw DomainError("step_1d: x must be nonnegative");
  const double dw = std::sqrt(dt) * rng.normal();
  const double drift = (1.0 - 0.5 * eta - static_cast<double>(n)) * x + 0.5;
  return std::max(0.0, x + x * dw + drift * dt);
}

}  // namespace hardedge
