#pragma once

#include <complex>
#include <cstddef>

#include "hardedge/core/types.hpp"

namespace hardedge {

/// Embeds an N-particle configuration into the boundary space by dividing by N.
/// gamma is the sum of the embedded atoms, so sum(xs) == gamma holds exactly.
OmegaPlusPoint embed(const OrderedConfig& config);

/// Interaction drift sum_{j != i} x_i x_j / (x_i - x_j).
/// Throws CoincidentCoordinates when |x_i - x_j| < 1e-13 * max(x_i, x_j).
double singular_drift(std::size_t i, const OrderedConfig& config);

/// -log prod_{i <= n < j} (1 - x_j / x_i) for 1 <= n <= N-1 (n counts the top
/// particles). Requires a strictly interior configuration.
double lyapunov_f(const OrderedConfig& config, std::size_t n);

/// prod_{j != i} (1 - x_j z)^2.
double char_poly_phi(std::size_t i, double z, const OrderedConfig& config);

/// d/dz log char_poly_phi(i, z, config) = sum_{j != i} -2 x_j / (1 - x_j z).
double char_poly_log_derivative(std::size_t i, double z, const OrderedConfig& config);

/// The interaction drift recovered from the characteristic polynomial:
/// -1/2 * (log Phi_i)'(1/x_i). Agrees with singular_drift to rounding.
double drift_via_charpoly(std::size_t i, const OrderedConfig& config);

/// e^{-gamma z} prod_j e^{x_j z} (1 - x_j z) over the finite support.
std::complex<double> limit_entire_eplus(std::complex<double> z, const OmegaPlusPoint& omega);

/// Reverse characteristic polynomial prod_j (1 - x_j z) of the embedded atoms.
std::complex<double> reverse_char_poly(std::complex<double> z, const OmegaPlusPoint& omega);

}  // namespace hardedge
