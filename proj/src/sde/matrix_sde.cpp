#include "hardedge/sde/matrix_sde.hpp"

#include <algorithm>
#include <cmath>

#include "hardedge/core/errors.hpp"

namespace hardedge {

namespace {

Eigen::MatrixXcd clip_psd(const Eigen::MatrixXcd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
  if (es.info() != Eigen::Success) throw EigensolveFailure("step_matrix_sde: eigensolve failed");
  const Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

HermitianState::HermitianState(Eigen::MatrixXcd m) {
  if (m.rows() != m.cols()) throw DomainError("HermitianState: matrix must be square");
  const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - herm).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw DomainError("HermitianState: matrix is not Hermitian");
  m_ = herm;
}

HermitianState HermitianState::diagonal(const OrderedConfig& config) {
  Eigen::VectorXcd d(static_cast<Eigen::Index>(config.size()));
  for (std::size_t i = 0; i < config.size(); ++i) d[static_cast<Eigen::Index>(i)] = config[i];
  return HermitianState(Eigen::MatrixXcd(d.asDiagonal()));
}

HermitianState step_matrix_sde(const HermitianState& h, const SdeParams& params, double dt,
                               RandomSource& rng) {
  const Eigen::Index n = h.size();
  const Eigen::MatrixXcd& m = h.matrix();
  // complex_normal has variance 1/2 per part.
  const double s = std::sqrt(2.0 * dt);
  Eigen::MatrixXcd g(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) g(i, j) = s * rng.complex_normal();

  const Eigen::MatrixXcd gh = g * m;
  Eigen::MatrixXcd next = m + 0.5 * (gh + gh.adjoint());
  next -= (0.5 * (params.eta + static_cast<double>(n)) * dt) * m;
  next.diagonal().array() += 0.5 * (1.0 + h.trace()) * dt;
  next = 0.5 * (next + next.adjoint()).eval();

  Eigen::LLT<Eigen::MatrixXcd> llt(next);
  if (llt.info() != Eigen::Success) next = clip_psd(next);
  return HermitianState(std::move(next));
}

HermitianState evolve_matrix(const HermitianState& h0, const SdeParams& params, double t,
                             RandomSource& rng) {
  HermitianState h = h0;
  double s = 0.0;
  while (s < t) {
    const double dt = std::min(params.dt_max, t - s);
    h = step_matrix_sde(h, params, dt, rng);
    s = (t - s - dt <= 1e-12 * params.dt_max) ? t : s + dt;
  }
  return h;
}

OrderedConfig eigenvalues(const HermitianState& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw EigensolveFailure("eigenvalues: eigensolve failed");
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + h.size());
  const double scale = std::max(1.0, v.empty() ? 0.0 : std::abs(v.back()));
  for (double& x : v) {
    if (x < 0.0) {
      if (x < -1e-10 * scale) throw DomainError("eigenvalues: matrix is not nonnegative");
      x = 0.0;
    }
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  return OrderedConfig(std::move(v));
}

}  // namespace hardedge
