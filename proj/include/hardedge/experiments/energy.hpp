#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "hardedge/core/random.hpp"
#include "hardedge/core/types.hpp"

namespace hardedge {

/// n x d sample, one point per row.
using SampleSet = Eigen::MatrixXd;

SampleSet to_sample_set(const std::vector<OrderedConfig>& configs);
SampleSet to_sample_set(const std::vector<double>& values);

struct PermutationTest {
  double statistic = 0.0;
  double pvalue = 1.0;
  int n_perm = 0;
};

/// V-statistic 2E|A-B| - E|A-A'| - E|B-B'| with Euclidean distances.
/// EmptySample on an empty side, DomainError on a dimension mismatch.
double energy_distance(const SampleSet& a, const SampleSet& b);

/// Label-permutation test of the energy statistic; p = (1 + #{E_perm >= E_obs}) / (1 + n_perm).
/// Permutations are drawn serially from rng, the quadratic forms are evaluated
/// blockwise in parallel and reduced in a fixed order, so the result does not
/// depend on the thread count. One-dimensional samples use a sorted O(n) scan
/// per permutation. Requires n_perm >= 200.
PermutationTest energy_permutation_test(const SampleSet& a, const SampleSet& b, int n_perm,
                                        RandomSource& rng);

/// Reference implementation over an explicit distance matrix, single-threaded.
/// Consumes rng exactly like energy_permutation_test.
PermutationTest energy_permutation_test_serial(const SampleSet& a, const SampleSet& b,
                                               int n_perm, RandomSource& rng);

}  // namespace hardedge
