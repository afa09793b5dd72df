#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "hardedge/core/random.hpp"
#include "hardedge/core/types.hpp"

namespace hardedge {

/// Haar unitary: QR of a complex Ginibre matrix with the R-diagonal phases
/// moved into Q.
Eigen::MatrixXcd haar_unitary(std::size_t n, RandomSource& rng);

/// First k columns of a Haar unitary (thin QR of an n x k Ginibre matrix,
/// filled column-major).
Eigen::MatrixXcd haar_frame(std::size_t n, std::size_t k, RandomSource& rng);

/// Sorted eigenvalues of V^* diag(x) V clamped into x_i >= y_i >= x_{i+N-K}.
OrderedConfig compress_spectrum(const OrderedConfig& config, const Eigen::MatrixXcd& frame);

/// One draw of the (N-1)-point corner kernel. Requires N >= 2; ties allowed.
OrderedConfig sample_corner(const OrderedConfig& config, RandomSource& rng);

/// One draw of the K-point corner kernel from N points, 1 <= K < N. Uses a
/// single Haar K-frame, which has the same law as N-K successive corners.
OrderedConfig sample_chain(const OrderedConfig& config, std::size_t k, RandomSource& rng);

/// N-K successive calls of sample_corner.
OrderedConfig sample_chain_iterated(const OrderedConfig& config, std::size_t k,
                                    RandomSource& rng);

/// K-point corner spectrum of (gamma - sum_{j<=J} x_j) I + sum_{j<=J} x_j xi_j xi_j^*
/// with xi_j standard complex Gaussian K-vectors. J is the shortest prefix of
/// the support whose dropped tail has mass below truncation_eps; the tail is
/// absorbed into the scalar term. The Gaussian draws are consumed as a J x K
/// column-major matrix, the same order as haar_frame(J, K).
OrderedConfig sample_boundary_corner(const OmegaPlusPoint& omega, std::size_t k,
                                     double truncation_eps, RandomSource& rng);

}  // namespace hardedge
