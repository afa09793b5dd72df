#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hardedge/experiments/report.hpp"
#include "hardedge/sde/eigen_sde.hpp"

namespace hardedge {

Integrator parse_integrator(const std::string& name);
std::string integrator_name(Integrator integrator);

struct IntertwiningConfig {
  /// N+1 starting points.
  std::vector<double> x{3.0, 2.0, 1.0};
  double t = 0.25;
  std::vector<double> etas{0.0, 1.0};
  std::size_t n = 20000;
  double dt = 5e-4;
  int n_perm = 200;
  double alpha = 0.01;
  bool negative_control = true;
  double control_eta_a = 0.0;
  double control_eta_b = 2.0;
  /// Replicas per side of the dt-halving check; 0 disables it.
  std::size_t sanity_n = 4000;
  std::string integrator = "eigen";
};

/// Evolve-then-corner against corner-then-evolve.
ExperimentReport test_intertwining(const IntertwiningConfig& cfg, std::uint64_t seed);

struct UniformApproxConfig {
  std::size_t k = 1;
  std::vector<std::size_t> ns{4, 8, 16, 32};
  /// x^{(N)}_i = N * scale * ratio^{i-1}.
  double scale = 0.5;
  double ratio = 0.5;
  double bump_center = 0.5;
  double bump_halfwidth = 0.3;
  double bump_amplitude = 1.0;
  std::size_t n = 100000;
  double truncation_eps = 1e-15;
  double threshold = 0.02;
  double slack_sigmas = 2.0;
};

/// exp(1 - 1/(1 - u^2)) for |u| < 1, u = (y - center)/halfwidth, times amplitude.
double bump(double y, double center, double halfwidth, double amplitude = 1.0);

/// Finite-N corner kernel against the boundary kernel at the embedded point.
ExperimentReport test_uniform_approx(const UniformApproxConfig& cfg, std::uint64_t seed);

struct EquilibriumConfig {
  std::size_t n_particles = 3;
  double eta = 0.5;
  std::vector<double> x0{100.0, 60.0, 30.0};
  /// Start every replica from an independent equilibrium draw instead of x0.
  bool stationary_start = false;
  std::vector<double> t_grid{1.0, 5.0, 20.0};
  std::size_t n = 10000;
  double dt = 1e-3;
  int n_perm = 200;
  double alpha = 0.01;
  /// Compare log coordinates (a bijection, so the null is unchanged).
  bool log_coordinates = true;
  std::size_t sanity_n = 2000;
  std::string integrator = "log";
};

/// Relaxation of the particle system toward the inverse Laguerre ensemble.
ExperimentReport test_equilibrium(const EquilibriumConfig& cfg, std::uint64_t seed);

struct CouplingConfig {
  std::vector<double> omega_xs{1.0};
  double omega_gamma = 1.0;
  std::vector<std::size_t> ns{8, 16, 32, 64};
  double horizon = 1.0;
  double dt = 2e-4;
  double eta = 0.0;
  /// Tail fillers f_i = filler_scale * i^{-filler_power} keep the start strictly ordered.
  double filler_scale = 0.05;
  double filler_power = 2.0;
  std::size_t paths = 4;
  double slack = 1.2;
  std::string integrator = "log";
};

/// Synchronously coupled rescaled systems of increasing size.
ExperimentReport test_coupling_l2(const CouplingConfig& cfg, std::uint64_t seed);

/// Embedded starting point of size N used by test_coupling_l2.
std::vector<double> coupling_start(const CouplingConfig& cfg, std::size_t n);

struct CollisionConfig {
  std::vector<std::size_t> ns{2, 4, 8, 16};
  /// x^{(N)}_i = top * ratio^{i-1} in embedded (rescaled) coordinates.
  double top = 1.0;
  double ratio = 0.5;
  double delta = 0.05;
  double eps = 0.1;
  double t = 1.0;
  std::size_t n = 10000;
  double eta = 0.0;
  double dt = 1e-3;
  std::string integrator = "eigen";
};

/// Near-collision frequency of the top pair against the Lyapunov bound.
ExperimentReport test_collision_bound(const CollisionConfig& cfg, std::uint64_t seed);

struct HardEdgeConfig {
  std::size_t n_particles = 200;
  double eta = 1.0;
  std::size_t n = 5000;
  std::size_t top = 3;
  double bin_lo = 0.12;
  double bin_hi = 2.5;
  /// Bins of equal kernel mass on [bin_lo, bin_hi].
  std::size_t bins = 10;
  double min_count = 100.0;
  double tolerance = 0.15;
  double scale = 4.0;
  /// Reported alongside for comparison, not asserted.
  double alt_scale = 8.0;
};

/// Top embedded points of the equilibrium ensemble against the inverse Bessel density.
ExperimentReport test_hard_edge_density(const HardEdgeConfig& cfg, std::uint64_t seed);

struct MatrixEigenConfig {
  std::vector<double> x0{3.0, 2.0, 1.0};
  double eta = 0.0;
  double t = 0.5;
  std::size_t n = 20000;
  double dt = 2.5e-4;
  double alpha = 0.01;
  bool negative_control = true;
  double control_eta = 2.0;
  std::size_t sanity_n = 4000;
};

/// Eigenvalues of the matrix diffusion against the eigenvalue system.
ExperimentReport test_matrix_eigen_agreement(const MatrixEigenConfig& cfg, std::uint64_t seed);

}  // namespace hardedge
