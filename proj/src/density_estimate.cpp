#include "brt/density_estimate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "brt/errors.hpp"
#include "brt/quadrature.hpp"

namespace brt {

BandwidthResult bandwidth(const BandwidthSchedule& s, std::size_t n) {
  if (n < 2) throw std::invalid_argument("bandwidth: n must be >= 2");
  if (s.c <= 0.0) throw ConfigError("bandwidth: c must be > 0");
  if (!(s.gamma > 0.0 && s.gamma < 0.5))
    throw ConfigError(
        "bandwidth: gamma must be in (0, 1/2); gamma >= 1/2 breaks n h^2 -> "
        "infinity and gamma <= 0 breaks h -> 0");

  BandwidthResult out;
  out.h = s.c * std::pow(static_cast<double>(n), -s.gamma);
  out.conditions = {
      {"shrinks", "h -> 0 needs gamma > 0", s.gamma > 0.0},
      {"variance_stabilizes", "n h^2 -> infinity needs gamma < 1/2",
       s.gamma < 0.5},
      {"null_rate", "n^{-1} h^{-4} (log log n)^2 -> 0 needs gamma < 1/4",
       s.gamma < 0.25},
      {"estimation_rate",
       "n^{2(alpha-1)} h^{-2} log log n -> 0 needs gamma < 1 - alpha",
       s.gamma < 1.0 - s.working_alpha},
  };
  out.all_satisfied = true;
  for (const auto& c : out.conditions) {
    if (!c.satisfied) {
      out.all_satisfied = false;
      out.warnings.push_back("bandwidth schedule violates " + c.name + ": " +
                             c.requirement);
    }
  }
  return out;
}

std::string_view to_string(SampleSource s) {
  return s == SampleSource::residuals ? "residuals" : "true_errors";
}

double grid_step(double h) { return std::min(h / 10.0, kGridStepCap); }

namespace {

std::vector<double> uniform_grid(double lo, double hi, double step) {
  const auto m = static_cast<std::size_t>(std::ceil((hi - lo) / step - 1e-12)) + 1;
  std::vector<double> g(m);
  for (std::size_t i = 0; i < m; ++i) g[i] = lo + static_cast<double>(i) * step;
  return g;
}

}  // namespace

std::vector<double> make_grid(double sample_lo, double sample_hi, double h,
                              double support) {
  if (h <= 0) throw std::invalid_argument("make_grid: h must be > 0");
  const double lo = std::max(sample_lo - h * support, -kGridCap);
  const double hi = std::min(sample_hi + h * support, kGridCap);
  return uniform_grid(lo, hi, grid_step(h));
}

std::vector<double> make_grid_covering(double sample_lo, double sample_hi,
                                       double h, double support,
                                       const Density& f0) {
  if (h <= 0) throw std::invalid_argument("make_grid_covering: h must be > 0");
  const double lo = std::max(
      std::min(sample_lo - h * support, f0.support_lo() - h * support), -kGridCap);
  const double hi = std::min(
      std::max(sample_hi + h * support, f0.support_hi() + h * support), kGridCap);
  return uniform_grid(lo, hi, grid_step(h));
}

DensityEstimate kde(std::span<const double> sample, const Kernel& k, double h,
                    std::vector<double> grid, SampleSource source) {
  if (sample.empty()) throw std::invalid_argument("kde: empty sample");
  if (h <= 0) throw std::invalid_argument("kde: h must be > 0");
  if (grid.size() < 2) throw std::invalid_argument("kde: grid too small");

  DensityEstimate e;
  e.bandwidth = h;
  e.n = sample.size();
  e.source = source;
  e.kernel = k.name();
  e.values.assign(grid.size(), 0.0);

  const double g0 = grid.front();
  const double step = grid[1] - grid[0];
  const double reach = h * k.support();
  const auto last = static_cast<std::ptrdiff_t>(grid.size()) - 1;
  for (const double s : sample) {
    // window of grid points with |t - s| <= reach
    auto j0 = static_cast<std::ptrdiff_t>(std::ceil((s - reach - g0) / step));
    auto j1 = static_cast<std::ptrdiff_t>(std::floor((s + reach - g0) / step));
    j0 = std::max<std::ptrdiff_t>(j0, 0);
    j1 = std::min(j1, last);
    for (std::ptrdiff_t j = j0; j <= j1; ++j)
      e.values[static_cast<std::size_t>(j)] += k((grid[static_cast<std::size_t>(j)] - s) / h);
  }
  const double scale = 1.0 / (static_cast<double>(sample.size()) * h);
  for (auto& v : e.values) v *= scale;
  e.grid = std::move(grid);
  return e;
}

namespace {

void require_same_grid(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || !std::equal(a.begin(), a.end(), b.begin()))
    throw std::invalid_argument("l2_distance_squared: mismatched grids");
}

}  // namespace

double l2_distance_squared(const DensityEstimate& a, const DensityEstimate& b) {
  require_same_grid(a.grid, b.grid);
  KahanSum s;
  for (std::size_t i = 0; i + 1 < a.grid.size(); ++i) {
    const double da = a.values[i] - b.values[i];
    const double db = a.values[i + 1] - b.values[i + 1];
    s.add(0.5 * (da * da + db * db) * (a.grid[i + 1] - a.grid[i]));
  }
  return s.value();
}

double l2_distance_squared(const DensityEstimate& a, const Density& b) {
  KahanSum s;
  for (std::size_t i = 0; i + 1 < a.grid.size(); ++i) {
    const double da = a.values[i] - b.pdf(a.grid[i]);
    const double db = a.values[i + 1] - b.pdf(a.grid[i + 1]);
    s.add(0.5 * (da * da + db * db) * (a.grid[i + 1] - a.grid[i]));
  }
  return s.value();
}

double l2_distance_squared(const Density& a, const Density& b,
                           std::span<const double> grid) {
  if (grid.size() < 2) throw std::invalid_argument("l2_distance_squared: grid too small");
  KahanSum s;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double da = a.pdf(grid[i]) - b.pdf(grid[i]);
    const double db = a.pdf(grid[i + 1]) - b.pdf(grid[i + 1]);
    s.add(0.5 * (da * da + db * db) * (grid[i + 1] - grid[i]));
  }
  return s.value();
}

void write_csv(const DensityEstimate& e, std::ostream& os) {
  os << "grid,value\n";
  char buf[64];
  for (std::size_t i = 0; i < e.grid.size(); ++i) {
    auto r1 = std::to_chars(buf, buf + sizeof(buf), e.grid[i]);
    os.write(buf, r1.ptr - buf);
    os.put(',');
    auto r2 = std::to_chars(buf, buf + sizeof(buf), e.values[i]);
    os.write(buf, r2.ptr - buf);
    os.put('\n');
  }
}

}  // namespace brt
