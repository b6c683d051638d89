#pragma once

#include <functional>
#include <span>
#include <vector>

namespace brt {

double mean(std::span<const double> x);
double sample_variance(std::span<const double> x);  // ddof = 1

struct MomentSummary {
  double mean;
  double variance;  // ddof = 1
  double skewness;
  double excess_kurtosis;
};
MomentSummary moments(std::span<const double> x);

double median(std::vector<double> x);  // by value: sorts a copy

// sup |ECDF - F| against a reference CDF
double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf);
double ks_distance_to_normal(std::vector<double> sample);

// One-sided Spearman trend test of y against x (H1: increasing). The p-value
// is exact (full permutation enumeration) for m <= 8 and a t-approximation
// beyond that.
struct SpearmanTrend {
  double rho;
  double p_value;  // P(rho_perm >= rho_obs)
};
SpearmanTrend spearman_trend(std::span<const double> x, std::span<const double> y);

}  // namespace brt
