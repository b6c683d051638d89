#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "brt/processes.hpp"
#include "brt/stats.hpp"

namespace brt {

enum class FitStatus { converged, max_iterations, no_decrease, singular };

std::string_view to_string(FitStatus s);

struct FitResult {
  std::vector<double> theta_hat;
  std::vector<double> residuals;  // eps_hat_1..eps_hat_n at theta_hat
  int iterations = 0;
  bool converged = false;
  FitStatus status = FitStatus::max_iterations;
  double sse = 0.0;
  std::vector<double> sse_trace;  // sse after each accepted step (never increases)
};

// Conditional least squares by Gauss-Newton with backtracking step halving
// (30 halvings max). Terminates when the accepted step is < 1e-10 or after
// 200 iterations; a gradient design matrix with condition number > 1e12 sets
// status = singular. Non-convergence is a flag, not an exception.
FitResult fit_cls(const Model& model, const SampleSeries& series,
                  std::span<const double> theta0);

// Plug-in residuals eps_hat_i = X_i - r_theta(lags_i).
std::vector<double> residuals(const Model& model, std::span<const double> theta,
                              const SampleSeries& series);

// Growth exponent of |sum_i dr/dtheta_j| across an n-battery: regresses
// log median |sum_i Y_ij| on log n per component and reports the max slope.
// Zero-mean gradient components give ~1/2 (CLT scaling); a nonzero-mean
// component gives ~1 and is flagged.
struct ExponentEstimate {
  double alpha_hat;
  std::vector<double> component_slopes;
  bool growth_flag;  // alpha_hat >= 0.9: summed gradients grow ~linearly
};
ExponentEstimate gradient_sum_exponent(const Model& model,
                                       std::span<const double> theta,
                                       const std::vector<SampleSeries>& battery);

struct LilSample {
  std::size_t n;
  double theta_err;  // |theta_hat - theta| (Euclidean)
};

// sqrt(n / log log n) |theta_hat - theta| per fit; passes when the per-n
// medians show no significant positive trend (Spearman at 5%).
struct TrendDiagnostic {
  std::vector<std::size_t> ns;
  std::vector<double> medians;
  SpearmanTrend trend;
  bool pass;
};
TrendDiagnostic lil_diagnostic(const std::vector<LilSample>& fits);

}  // namespace brt
