#pragma once

#include <vector>

#include <Eigen/Dense>

namespace hardedge {

/// J_nu(x) for x >= 0, nu > -1. Power series for x <= 12, Miller backward
/// recurrence normalized by the Neumann series up to x = 60, Hankel
/// asymptotics beyond. ConvergenceFailure if a series does not settle.
double bessel_j(double nu, double x);

/// Hard-edge Bessel kernel
/// [sqrt(x) J_{eta+1}(sqrt x) J_eta(sqrt y) - sqrt(y) J_{eta+1}(sqrt y) J_eta(sqrt x)] / (2(x - y)),
/// switching to the diagonal limit (J_eta^2 - J_{eta+1} J_{eta-1}) / 4 when
/// |x - y| < 1e-6 max(x, y).
double bessel_kernel(double eta, double x, double y);

/// Default spatial scale of the inverse kernel: the 1/N-embedded top points of
/// the equilibrium ensemble are 4 / (hard-edge Bessel points).
inline constexpr double kInverseBesselScale = 4.0;

/// (s/(x y)) J_eta(s/x, s/y) with s = scale. The diagonal is the one-point
/// density of the limiting equilibrium point process.
double inverse_bessel_kernel(double eta, double x, double y, double scale = kInverseBesselScale);

struct KernelGrid {
  std::vector<double> points;
  Eigen::MatrixXd values;
};

/// Evaluates inverse_bessel_kernel on points x points. Points must be
/// positive and increasing (DomainError).
KernelGrid make_kernel_grid(double eta, std::vector<double> points,
                            double scale = kInverseBesselScale);

}  // namespace hardedge
