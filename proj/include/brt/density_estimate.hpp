#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "brt/densities.hpp"
#include "brt/kernels.hpp"

namespace brt {

// h(n) = c n^{-gamma}. working_alpha is the assumed growth exponent of the
// summed model gradients (1/2 for the built-in zero-mean families).
struct BandwidthSchedule {
  double c = 1.0;
  double gamma = 0.2;
  double working_alpha = 0.5;
};

struct BandwidthCondition {
  std::string name;
  std::string requirement;
  bool satisfied;
};

struct BandwidthResult {
  double h;
  std::vector<BandwidthCondition> conditions;
  std::vector<std::string> warnings;  // violated rate conditions (not fatal)
  bool all_satisfied;
};

// Throws ConfigError when gamma is outside (0, 1/2); rate conditions beyond
// that only produce warnings.
BandwidthResult bandwidth(const BandwidthSchedule& s, std::size_t n);

enum class SampleSource { residuals, true_errors };
std::string_view to_string(SampleSource s);

struct DensityEstimate {
  std::vector<double> grid;
  std::vector<double> values;
  double bandwidth = 0.0;
  std::size_t n = 0;
  SampleSource source = SampleSource::residuals;
  KernelName kernel = KernelName::epanechnikov;
};

inline constexpr double kGridCap = 12.0;    // hard range cap; built-in densities
                                            // are < 1e-30 beyond this
inline constexpr double kGridStepCap = 0.02;

double grid_step(double h);  // min(h/10, 0.02)

// Uniform grid over [lo - h support, hi + h support] clipped to +-kGridCap.
std::vector<double> make_grid(double sample_lo, double sample_hi, double h,
                              double support);

// Grid that additionally covers the reference density's effective support
// (quantiles 1e-8 padded by the kernel halfwidth), so statistic integrals do
// not lose (K_h * f0)^2 tail mass outside the sample hull.
std::vector<double> make_grid_covering(double sample_lo, double sample_hi,
                                       double h, double support,
                                       const Density& f0);

// Exact KDE: values[j] = (1/n) sum_i K_h(grid[j] - sample_i). No binning.
DensityEstimate kde(std::span<const double> sample, const Kernel& k, double h,
                    std::vector<double> grid, SampleSource source);

// Trapezoid integral of (a-b)^2; grids must match exactly.
double l2_distance_squared(const DensityEstimate& a, const DensityEstimate& b);
double l2_distance_squared(const DensityEstimate& a, const Density& b);
double l2_distance_squared(const Density& a, const Density& b,
                           std::span<const double> grid);

// two-column CSV (grid,value)
void write_csv(const DensityEstimate& e, std::ostream& os);

}  // namespace brt
