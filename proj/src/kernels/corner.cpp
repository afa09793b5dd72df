#include "hardedge/kernels/corner.hpp"

#include <algorithm>
#include <cmath>

#include "hardedge/core/errors.hpp"

namespace hardedge {

namespace {

Eigen::MatrixXcd ginibre(std::size_t n, std::size_t k, RandomSource& rng) {
  Eigen::MatrixXcd z(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
  for (Eigen::Index j = 0; j < z.cols(); ++j)
    for (Eigen::Index i = 0; i < z.rows(); ++i) z(i, j) = rng.complex_normal();
  return z;
}

Eigen::MatrixXcd orthonormalize(const Eigen::MatrixXcd& z) {
  const Eigen::Index n = z.rows();
  const Eigen::Index k = z.cols();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, k);
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < k; ++j) {
    const std::complex<double> d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXcd& a) {
  std::vector<double> v;
  if (a.rows() == 1) {
    v.push_back(a(0, 0).real());
    return v;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw EigensolveFailure("corner: eigensolve failed");
  v.assign(es.eigenvalues().data(), es.eigenvalues().data() + a.rows());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

Eigen::MatrixXcd haar_unitary(std::size_t n, RandomSource& rng) {
  return orthonormalize(ginibre(n, n, rng));
}

Eigen::MatrixXcd haar_frame(std::size_t n, std::size_t k, RandomSource& rng) {
  if (k == 0 || k > n) throw DomainError("haar_frame: need 1 <= k <= n");
  return orthonormalize(ginibre(n, k, rng));
}

OrderedConfig compress_spectrum(const OrderedConfig& config, const Eigen::MatrixXcd& frame) {
  const std::size_t n = config.size();
  const std::size_t k = static_cast<std::size_t>(frame.cols());
  Eigen::VectorXd x(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) x[static_cast<Eigen::Index>(i)] = config[i];
  const Eigen::MatrixXcd a = frame.adjoint() * x.asDiagonal() * frame;
  std::vector<double> y = sorted_eigenvalues(0.5 * (a + a.adjoint()));
  for (std::size_t i = 0; i < k; ++i) y[i] = std::clamp(y[i], config[i + n - k], config[i]);
  return OrderedConfig(std::move(y));
}

OrderedConfig sample_corner(const OrderedConfig& config, RandomSource& rng) {
  if (config.size() < 2) throw DomainError("sample_corner: need N >= 2");
  return sample_chain(config, config.size() - 1, rng);
}

OrderedConfig sample_chain(const OrderedConfig& config, std::size_t k, RandomSource& rng) {
  const std::size_t n = config.size();
  if (k < 1 || k >= n) throw DomainError("sample_chain: need 1 <= K < N");
  return compress_spectrum(config, haar_frame(n, k, rng));
}

OrderedConfig sample_chain_iterated(const OrderedConfig& config, std::size_t k,
                                    RandomSource& rng) {
  if (k < 1 || k >= config.size()) throw DomainError("sample_chain_iterated: need 1 <= K < N");
  OrderedConfig y = config;
  while (y.size() > k) y = sample_corner(y, rng);
  return y;
}

OrderedConfig sample_boundary_corner(const OmegaPlusPoint& omega, std::size_t k,
                                     double truncation_eps, RandomSource& rng) {
  if (k < 1) throw DomainError("sample_boundary_corner: need K >= 1");
  if (!(truncation_eps > 0.0)) throw ParameterError("sample_boundary_corner: truncation_eps must be positive");
  const auto xs = omega.xs();
  std::size_t j_cut = omega.support_size();
  double tail = 0.0;
  while (j_cut > 0 && tail + xs[j_cut - 1] < truncation_eps) tail += xs[--j_cut];
  double head = 0.0;
  for (std::size_t j = 0; j < j_cut; ++j) head += xs[j];
  const double scalar = std::max(0.0, omega.gamma() - head);

  const auto ji = static_cast<Eigen::Index>(j_cut);
  const auto ki = static_cast<Eigen::Index>(k);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(ki, ki) * scalar;
  if (j_cut > 0) {
    const Eigen::MatrixXcd z = ginibre(j_cut, k, rng);
    Eigen::VectorXd w(ji);
    for (Eigen::Index j = 0; j < ji; ++j) w[j] = xs[static_cast<std::size_t>(j)];
    a += z.adjoint() * w.asDiagonal() * z;
  }
  std::vector<double> y = sorted_eigenvalues(0.5 * (a + a.adjoint()));
  for (double& v : y) v = std::max(v, scalar);
  return OrderedConfig(std::move(y));
}

}  // namespace hardedge
