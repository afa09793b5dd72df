#pragma once

#include <cstddef>

#include "hardedge/core/random.hpp"
#include "hardedge/core/types.hpp"

namespace hardedge {

/// Exact draw from the density proportional to Delta(y)^2 prod y_i^eta e^{-y_i}
/// through the tridiagonal model: T = B B^T with B lower bidiagonal,
/// B_ii^2 ~ Gamma(eta + N - i), B_{i+1,i}^2 ~ Gamma(N - 1 - i). Sorted decreasing.
/// ParameterError if eta <= -1.
OrderedConfig sample_laguerre(std::size_t n, double eta, RandomSource& rng);

/// 1/y of a sample_laguerre draw, sorted decreasing. The map y -> 1/y carries
/// the Laguerre weight to Delta(x)^2 prod x_i^{-eta-2N} e^{-1/x_i}.
OrderedConfig sample_inverse_laguerre(std::size_t n, double eta, RandomSource& rng);

/// Coordinate inversion 1/x, re-sorted decreasing. Requires x > 0.
OrderedConfig invert_coordinates(const OrderedConfig& config);

/// CDF of the N = 1 equilibrium law, the inverse gamma with shape eta + 1:
/// P(X <= x) = Q(eta + 1, 1/x).
double inverse_gamma_cdf(double shape, double x);

}  // namespace hardedge
