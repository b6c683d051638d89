#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace brt {

// Composite trapezoid over a tabulated function on a (possibly nonuniform)
// grid.
double trapezoid(std::span<const double> grid, std::span<const double> values);

// Trapezoid of f over [a, b] with the given step; the last interval is
// shortened so b is always a node.
template <typename F>
double trapezoid_fn(F&& f, double a, double b, double step) {
  if (b <= a) return 0.0;
  const auto m = static_cast<std::size_t>(std::ceil((b - a) / step - 1e-9));
  double sum = 0.5 * f(a);
  double x = a;
  for (std::size_t i = 1; i < m; ++i) {
    x = a + static_cast<double>(i) * step;
    sum += f(x);
  }
  sum *= step;
  // closing interval [a + (m-1) step, b]
  const double x_last = a + static_cast<double>(m - 1) * step;
  sum += 0.5 * (f(x_last) + f(b)) * (b - x_last);
  sum -= 0.5 * f(x_last) * step;  // the loop counted f(x_last) with full weight
  return sum;
}

// Uniform-step trapezoid over [-half, half] anchored so 0 is a node; the
// standard rule for the density-vs-density integrals (all built-in densities
// are negligible beyond |x| = 12, kinks sit at 0).
template <typename F>
double integrate_symmetric(F&& f, double half, double step = 1e-3) {
  const auto m = static_cast<std::size_t>(std::ceil(half / step));
  const double lo = -static_cast<double>(m) * step;
  double sum = 0.5 * (f(lo) + f(-lo));
  for (std::size_t i = 1; i < 2 * m; ++i)
    sum += f(lo + static_cast<double>(i) * step);
  return sum * step;
}

// 20-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; the rule
// is symmetric). Exact for polynomials up to degree 39.
inline constexpr std::array<double, 10> kGl20Nodes = {
    0.0765265211334973, 0.2277858511416451, 0.3737060887154195,
    0.5108670019508271, 0.6360536807265150, 0.7463319064601508,
    0.8391169718222188, 0.9122344282513259, 0.9639719272779138,
    0.9931285991850949};
inline constexpr std::array<double, 10> kGl20Weights = {
    0.1527533871307258, 0.1491729864726037, 0.1420961093183820,
    0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
    0.0832767415767048, 0.0626720483341091, 0.0406014298003869,
    0.0176140071391521};

template <typename F>
double gauss_legendre(F&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < kGl20Nodes.size(); ++i) {
    const double d = r * kGl20Nodes[i];
    sum += kGl20Weights[i] * (f(c - d) + f(c + d));
  }
  return sum * r;
}

// Gauss-Legendre applied piecewise between sorted breakpoints.
template <typename F>
double gauss_legendre_pieces(F&& f, std::span<const double> breaks) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    if (breaks[i + 1] > breaks[i]) sum += gauss_legendre(f, breaks[i], breaks[i + 1]);
  return sum;
}

// Kahan-compensated accumulator for long sums.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace brt
