#include "brt/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "brt/errors.hpp"

namespace brt {

namespace {
// piece boundaries for Gauss-Legendre integration
constexpr std::array<double, 2> kOnePiece = {-1.0, 1.0};
constexpr std::array<double, 3> kTwoPieces = {-1.0, 0.0, 1.0};
constexpr std::array<double, 5> kConvPieces = {-2.0, -1.0, 0.0, 1.0, 2.0};
}  // namespace

std::string_view to_string(KernelName name) {
  switch (name) {
    case KernelName::epanechnikov: return "epanechnikov";
    case KernelName::quartic: return "quartic";
    case KernelName::triangular: return "triangular";
  }
  return "?";
}

double Kernel::operator()(double x) const {
  const double a = std::fabs(x);
  if (a >= 1.0) return 0.0;
  switch (name_) {
    case KernelName::epanechnikov:
      return 0.75 * (1.0 - x * x);
    case KernelName::quartic: {
      const double t = 1.0 - x * x;
      return 0.9375 * t * t;
    }
    case KernelName::triangular:
      return 1.0 - a;
  }
  return 0.0;
}

// Closed forms from symbolic integration of int K(t) K(u-t) dt.
double Kernel::self_convolution(double u) const {
  const double a = std::fabs(u);
  if (a >= 2.0) return 0.0;
  switch (name_) {
    case KernelName::epanechnikov: {
      const double d = 2.0 - a;
      return (3.0 / 160.0) * d * d * d * (a * a + 6.0 * a + 4.0);
    }
    case KernelName::quartic: {
      const double d = 2.0 - a;
      const double d2 = d * d;
      const double poly = ((((a + 10.0) * a + 36.0) * a + 40.0) * a + 16.0);
      return (5.0 / 3584.0) * d2 * d2 * d * poly;
    }
    case KernelName::triangular: {
      if (a <= 1.0) return (0.5 * a - 1.0) * a * a + 2.0 / 3.0;
      const double d = 2.0 - a;
      return d * d * d / 6.0;
    }
  }
  return 0.0;
}

KernelConstants Kernel::constants() const {
  switch (name_) {
    case KernelName::epanechnikov:
      return {3.0 / 5.0, 167.0 / 385.0, 1.0 / 5.0};
    case KernelName::quartic:
      return {5.0 / 7.0, 1168780.0 / 2263261.0, 1.0 / 7.0};
    case KernelName::triangular:
      return {2.0 / 3.0, 151.0 / 315.0, 1.0 / 6.0};
  }
  return {};
}

int Kernel::smoothness_class() const {
  // quartic is C^1 on R (derivative vanishes at +-1); the others have corners
  return name_ == KernelName::quartic ? 1 : 0;
}

std::span<const double> Kernel::breakpoints() const {
  if (name_ == KernelName::triangular) return kTwoPieces;
  return kOnePiece;
}

std::span<const double> Kernel::conv_breakpoints() const { return kConvPieces; }

Kernel kernel_from_string(std::string_view name) {
  if (name == "epanechnikov") return Kernel(KernelName::epanechnikov);
  if (name == "quartic") return Kernel(KernelName::quartic);
  if (name == "triangular") return Kernel(KernelName::triangular);
  throw ConfigError("unknown kernel '" + std::string(name) + "'");
}

double scaled_kernel_eval(const Kernel& k, double h, double u) {
  if (h <= 0) throw std::invalid_argument("scaled_kernel_eval: h must be > 0");
  return k(u / h) / h;
}

KernelConstants kernel_constants_quadrature(const Kernel& k, double step) {
  KernelConstants c{};
  c.r_k = trapezoid_fn([&](double x) { const double v = k(x); return v * v; },
                       -1.0, 1.0, step);
  c.sigma2_k = trapezoid_fn([&](double x) { return x * x * k(x); }, -1.0, 1.0, step);
  c.r_kk = trapezoid_fn(
      [&](double u) { const double v = k.self_convolution(u); return v * v; },
      -2.0, 2.0, step);
  return c;
}

double self_convolution_quadrature(const Kernel& k, double u, double step) {
  // overlap of supports: t in [max(-1, u-1), min(1, u+1)]
  const double lo = std::max(-1.0, u - 1.0);
  const double hi = std::min(1.0, u + 1.0);
  if (hi <= lo) return 0.0;
  return trapezoid_fn([&](double t) { return k(t) * k(u - t); }, lo, hi, step);
}

double convolve_with_density(const Kernel& k, double h, const Density& f, double t) {
  return convolve_with_pdf(k, h, [&](double x) { return f.pdf(x); }, t, f.kinks());
}

double double_smoothed_eval(const Kernel& k, double h, const Density& f, double t) {
  if (h <= 0) throw std::invalid_argument("double_smoothed_eval: h must be > 0");
  // int (K*K)(y) f(t - h y) dy, pieces split at conv breakpoints and kink
  // preimages
  const auto base = k.conv_breakpoints();
  double breaks[16];
  std::size_t m = 0;
  for (double b : base) breaks[m++] = b;
  for (double kink : f.kinks()) {
    const double y = (t - kink) / h;
    if (y > base.front() && y < base.back()) breaks[m++] = y;
  }
  std::sort(breaks, breaks + m);
  return gauss_legendre_pieces(
      [&](double y) { return k.self_convolution(y) * f.pdf(t - h * y); },
      std::span<const double>(breaks, m));
}

}  // namespace brt
