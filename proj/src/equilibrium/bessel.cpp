#include "hardedge/equilibrium/bessel.hpp"

#include <cmath>
#include <numbers>

#include "hardedge/core/errors.hpp"

namespace hardedge {

namespace {

double series(double nu, double x) {
  const double q = -0.25 * x * x;
  double term = std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0));
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (k * (k + nu));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum) && k > 0.5 * x) return sum;
  }
  throw ConvergenceFailure("bessel_j: power series did not converge");
}

double miller(double nu, double x) {
  // Even starting offset well past the turning point.
  int m = static_cast<int>(x + 30.0 + 4.0 * std::cbrt(x));
  m += m % 2;
  double jp1 = 0.0;
  double j = 1e-300;
  double norm = 0.0;
  double jnu = 0.0;
  for (int k = m; k >= 0; --k) {
    // j holds J_{nu+k}; accumulate the Neumann weight for even k.
    if (k % 2 == 0) {
      const int h = k / 2;
      const double c = h == 0 ? std::tgamma(nu + 1.0)
                              : (nu + k) * std::exp(std::lgamma(nu + h) - std::lgamma(h + 1.0));
      norm += c * j;
    }
    if (k == 0) {
      jnu = j;
      break;
    }
    const double jm1 = 2.0 * (nu + k) / x * j - jp1;
    jp1 = j;
    j = jm1;
    if (std::abs(j) > 1e250) {
      j *= 1e-250;
      jp1 *= 1e-250;
      norm *= 1e-250;
    }
  }
  return std::pow(0.5 * x, nu) * jnu / norm;
}

double hankel(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0, q = 0.0;
  double term = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (k * 8.0 * x);
    if (std::abs(term) > std::abs(prev) && k > 2) break;
    if (k % 2 == 1)
      q += (k % 4 == 1 ? 1.0 : -1.0) * term;
    else
      p += (k % 4 == 2 ? -1.0 : 1.0) * term;
    prev = term;
    if (std::abs(term) < 1e-17) break;
  }
  const double chi = x - (0.5 * nu + 0.25) * std::numbers::pi;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double bessel_j(double nu, double x) {
  if (!(nu > -1.0)) throw DomainError("bessel_j: nu must exceed -1");
  if (!(x >= 0.0)) throw DomainError("bessel_j: x must be nonnegative");
  if (x == 0.0) {
    if (nu == 0.0) return 1.0;
    return nu > 0.0 ? 0.0 : INFINITY;
  }
  if (x <= 12.0) return series(nu, x);
  if (x <= 60.0) return miller(nu, x);
  return hankel(nu, x);
}

double bessel_kernel(double eta, double x, double y) {
  if (!(x > 0.0 && y > 0.0)) throw DomainError("bessel_kernel: x and y must be positive");
  const double sx = std::sqrt(x);
  if (std::abs(x - y) < 1e-6 * std::max(x, y)) {
    const double j0 = bessel_j(eta, sx);
    const double j1 = bessel_j(eta + 1.0, sx);
    // J_{eta-1} by the three-term recurrence, valid for every eta > -1.
    const double jm1 = 2.0 * eta / sx * j0 - j1;
    return 0.25 * (j0 * j0 - j1 * jm1);
  }
  const double sy = std::sqrt(y);
  const double num = sx * bessel_j(eta + 1.0, sx) * bessel_j(eta, sy) -
                     sy * bessel_j(eta + 1.0, sy) * bessel_j(eta, sx);
  return num / (2.0 * (x - y));
}

double inverse_bessel_kernel(double eta, double x, double y, double scale) {
  if (!(x > 0.0 && y > 0.0)) throw DomainError("inverse_bessel_kernel: x and y must be positive");
  return scale / (x * y) * bessel_kernel(eta, scale / x, scale / y);
}

KernelGrid make_kernel_grid(double eta, std::vector<double> points, double scale) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i] > 0.0)) throw DomainError("make_kernel_grid: points must be positive");
    if (i > 0 && !(points[i] > points[i - 1]))
      throw DomainError("make_kernel_grid: points must be increasing");
  }
  const auto n = static_cast<Eigen::Index>(points.size());
  KernelGrid g{std::move(points), Eigen::MatrixXd(n, n)};
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j <= i; ++j) {
      const double v = inverse_bessel_kernel(eta, g.points[static_cast<std::size_t>(i)],
                                             g.points[static_cast<std::size_t>(j)], scale);
      g.values(i, j) = v;
      g.values(j, i) = v;
    }
  return g;
}

}  // namespace hardedge
