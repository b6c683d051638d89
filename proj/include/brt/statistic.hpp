#pragma once

#include <span>
#include <string>

#include "brt/densities.hpp"
#include "brt/density_estimate.hpp"
#include "brt/kernels.hpp"

#include "json.hpp"

namespace brt {

enum class Regime { null_calibrated, alternative_calibrated };
std::string_view to_string(Regime r);

// The standardized statistic. z = scale (t_stat - centering) / sqrt(variance)
// with scale = n sqrt(h) in the null regime and sqrt(n) under a fixed
// alternative; p_value is the one-sided upper tail (large statistics reject).
struct TestOutcome {
  double t_stat = 0.0;
  std::size_t n = 0;
  double h = 0.0;
  double centering = 0.0;
  double variance = 0.0;
  double z = 0.0;
  double p_value = 1.0;
  Regime regime = Regime::null_calibrated;
  SampleSource source = SampleSource::residuals;
  KernelName kernel = KernelName::epanechnikov;
  std::string f0_name;
};

nlohmann::json to_json(const TestOutcome& o);

// int (fhat - K_h * f0)^2 over the estimate's grid (trapezoid). The estimate
// must have been computed with the same kernel and bandwidth.
double statistic_quadrature(const DensityEstimate& fhat, const Kernel& k,
                            double h, const Density& f0);

// Grid-free oracle: (1/n^2) sum_ij (K_h*K_h)(e_i - e_j)
//                   - (2/n) sum_i (K_h*K_h*f0)(e_i) + int (K_h*f0)^2,
// using the closed-form self-convolution. O(n^2); rejects n > 20000.
double statistic_exact(std::span<const double> sample, const Kernel& k, double h,
                       const Density& f0);

// (1/n^2) sum_ij (K_h*K_h)(e_i - e_j), the squared-norm part of the statistic
double pairwise_self_convolution_mean(std::span<const double> sample,
                                      const Kernel& k, double h);

// int (K_h * f0)^2 (t) dt
double smoothed_squared_norm(const Kernel& k, double h, const Density& f0);

// int f^2, quadrature path used by the null standardization
double density_squared_norm(const Density& f);

// int (K_h * (f - f0))^2, the fixed-alternative centering at the working h
double alternative_centering(const Kernel& k, double h, const Density& f,
                             const Density& f0);

// 4 Var[(f - f0)(eps_1)], eps_1 ~ f
double alternative_variance(const Density& f, const Density& f0);

TestOutcome standardize_null(double t_stat, std::size_t n, double h,
                             const Kernel& k, const Density& f0,
                             SampleSource source);

// Throws std::invalid_argument when f = f0 in L2 (the limit variance
// degenerates).
TestOutcome standardize_alternative(double t_stat, std::size_t n, double h,
                                    const Kernel& k, const Density& f,
                                    const Density& f0, SampleSource source);

// assembled from precomputed centering/variance (used by the Monte Carlo
// engine, which shares them across replications)
TestOutcome make_outcome(double t_stat, std::size_t n, double h, double centering,
                         double variance, Regime regime, SampleSource source,
                         KernelName kernel, std::string f0_name);

// U-statistic expansion of the oracle statistic on true errors:
//   T_n = u_n + linear_term + diag_term + g_sq_term  (exact algebra)
// with H_n(a,b) = int [K_h(x-a) - e_h(x)][K_h(x-b) - e_h(x)] dx,
// e_h = K_h * f, g_h = K_h * (f - f0), Y_i = (K_h*g_h)(eps_i) - E[...].
struct DecompositionReport {
  double u_n = 0.0;          // (2/n^2) sum_{i<j} H_n(eps_i, eps_j)
  double linear_term = 0.0;  // (2/n) sum_i Y_i
  double diag_term = 0.0;    // (1/n^2) sum_i int [K_h(x-eps_i) - e_h(x)]^2 dx
  double g_sq_term = 0.0;    // int g_h^2
  double t_n_direct = 0.0;   // statistic_exact on the same sample
  double total() const { return u_n + linear_term + diag_term + g_sq_term; }
};

// Oracle-side only (needs true errors and the true marginal f); rejects
// n > 5000.
DecompositionReport decomposition(std::span<const double> true_errors,
                                  const Kernel& k, double h, const Density& f,
                                  const Density& f0);

}  // namespace brt
