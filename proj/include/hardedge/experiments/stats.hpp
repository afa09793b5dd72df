#pragma once

#include <functional>
#include <span>
#include <vector>

namespace hardedge {

struct TestResult {
  double statistic = 0.0;
  double pvalue = 1.0;
};

struct MeanEstimate {
  double mean = 0.0;
  /// Standard error of the mean.
  double se = 0.0;
  std::size_t n = 0;
};

MeanEstimate mean_estimate(std::span<const double> v);

/// Asymptotic Kolmogorov tail with the Stephens small-sample correction,
/// evaluated at effective size n_eff.
double kolmogorov_pvalue(double d, double n_eff);

/// One-sample KS against a continuous CDF. EmptySample on empty input.
TestResult ks_one_sample(std::vector<double> sample, const std::function<double(double)>& cdf);

/// Two-sample KS; n_eff = n m / (n + m).
TestResult ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Pearson chi-square upper tail Q(dof/2, stat/2).
double chi_square_pvalue(double statistic, double dof);

/// Pearson statistic for observed counts against expected probabilities.
/// Cells with expected count below min_expected are pooled into one cell.
TestResult chi_square_test(std::span<const double> observed, std::span<const double> probabilities,
                           double min_expected = 5.0);

}  // namespace hardedge
