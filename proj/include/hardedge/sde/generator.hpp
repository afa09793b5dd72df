#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hardedge/core/types.hpp"

namespace hardedge {

/// A test function given by its value, gradient and Hessian diagonal. The
/// generator only needs the diagonal second derivatives.
struct SmoothFunction {
  std::function<double(std::span<const double>)> value;
  std::function<std::vector<double>(std::span<const double>)> gradient;
  std::function<std::vector<double>(std::span<const double>)> hessian_diagonal;
};

/// sum_i x_i^2/2 f_ii + sum_i (-(eta/2) x_i + 1/2 + sum_{j != i} x_i x_j/(x_i - x_j)) f_i
/// for the unrescaled system. Throws DomainError off the open chamber and
/// CoincidentCoordinates through the interaction term.
double generator_apply(const SmoothFunction& f, const OrderedConfig& config, double eta);

/// f(x) = sum_i x_i^p with its derivatives.
SmoothFunction power_sum(int p);

}  // namespace hardedge
