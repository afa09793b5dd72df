#pragma once

#include <Eigen/Dense>

#include "hardedge/core/random.hpp"
#include "hardedge/core/types.hpp"

namespace hardedge {

/// Nonnegative-definite Hermitian matrix state of the matrix diffusion.
class HermitianState {
 public:
  HermitianState() = default;
  /// Symmetrizes the input; throws DomainError if it is not square or is
  /// farther than 1e-12 from Hermitian.
  explicit HermitianState(Eigen::MatrixXcd m);
  static HermitianState diagonal(const OrderedConfig& config);

  const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
  Eigen::Index size() const noexcept { return m_.rows(); }
  double trace() const { return m_.trace().real(); }

 private:
  Eigen::MatrixXcd m_;
};

/// Euler step of dH = (dG H + H dG^*)/2 + (-(eta+N)/2 H + (1 + Tr H)/2 I) dt,
/// G with independent complex entries whose real and imaginary parts each have
/// variance dt. The result is re-Hermitized and its eigenvalues clipped at 0.
/// Uses the plain (unrescaled) drift regardless of params.rescaled.
HermitianState step_matrix_sde(const HermitianState& h, const SdeParams& params, double dt,
                               RandomSource& rng);

/// Number of steps on [0, t] with step params.dt_max.
HermitianState evolve_matrix(const HermitianState& h0, const SdeParams& params, double t,
                             RandomSource& rng);

/// Sorted decreasing eigenvalues; values in [-1e-10 * scale, 0) are clipped to
/// 0, anything more negative raises DomainError. EigensolveFailure when the
/// solver does not converge.
OrderedConfig eigenvalues(const HermitianState& h);

}  // namespace hardedge
