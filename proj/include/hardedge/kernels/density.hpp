#pragma once

#include <cstddef>

#include "hardedge/core/types.hpp"

namespace hardedge {

/// Largest N and K for which the determinant formula is evaluated directly.
inline constexpr std::size_t kDensityMaxN = 30;
inline constexpr std::size_t kDensityMaxK = 6;

/// prod_{i<j} (v_i - v_j).
double vandermonde(std::span<const double> v);

/// Density of the K-point corner kernel from x at y (Lebesgue on the ordered
/// chamber): a binomial prefactor times a K x K determinant of splines on
/// shifted knot windows, times Delta_K(y), over prod_{j-i >= N-K+1} (x_i - x_j).
///
/// x must be strictly decreasing. Outside N <= 30, K <= 6 a Monte Carlo box
/// estimate with a fixed seed is returned and a warning goes to stderr.
/// NumericalInstability when the denominator condition estimate exceeds 1e12.
double lambda_kn_density(const OrderedConfig& y, const OrderedConfig& x, std::size_t k);

/// Closed form for K = N-1: (N-1)! Delta_{N-1}(y) / Delta_N(x) on y interlacing x.
double corner_density(const OrderedConfig& y, const OrderedConfig& x);

}  // namespace hardedge
