#pragma once

#include <span>
#include <string>
#include <string_view>

#include "brt/densities.hpp"
#include "brt/quadrature.hpp"

namespace brt {

enum class KernelName { epanechnikov, quartic, triangular };

std::string_view to_string(KernelName name);

struct KernelConstants {
  double r_k;       // int K^2
  double r_kk;      // int (K*K)^2
  double sigma2_k;  // int x^2 K
};

// Compact-support symmetric kernels on [-1, 1]. All are piecewise
// polynomials; the self-convolution (K*K) is hard-coded from a symbolic
// derivation and validated against quadrature in the test suite.
class Kernel {
 public:
  explicit Kernel(KernelName name) : name_(name) {}

  KernelName name() const { return name_; }
  double support() const { return 1.0; }

  double operator()(double x) const;

  // (K*K)(u); symmetric, zero for |u| > 2.
  double self_convolution(double u) const;

  // closed-form constants
  KernelConstants constants() const;

  // highest k such that K is C^k on all of R (quartic: 1, others: 0)
  int smoothness_class() const;

  // polynomial-piece breakpoints of K on [-1,1] and of K*K on [-2,2]
  std::span<const double> breakpoints() const;
  std::span<const double> conv_breakpoints() const;

 private:
  KernelName name_;
};

Kernel kernel_from_string(std::string_view name);  // throws ConfigError

// (1/h) K(u/h); throws std::invalid_argument for h <= 0.
double scaled_kernel_eval(const Kernel& k, double h, double u);

// quadrature cross-check path for the constants (trapezoid at `step`)
KernelConstants kernel_constants_quadrature(const Kernel& k, double step = 2e-5);

// quadrature cross-check for (K*K)(u) (trapezoid at `step`)
double self_convolution_quadrature(const Kernel& k, double u, double step = 1e-4);

// (K_h * f)(t) = int K(x) f(t - h x) dx. Gauss-Legendre between the kernel's
// polynomial breakpoints and the density's kink preimages, so the integrand
// is smooth on every piece. Throws std::invalid_argument for h <= 0.
template <typename PdfFn>
double convolve_with_pdf(const Kernel& k, double h, PdfFn&& pdf, double t,
                         std::span<const double> pdf_kinks = {}) {
  if (h <= 0) throw std::invalid_argument("convolve_with_pdf: h must be > 0");
  const auto base = k.breakpoints();
  double breaks[16];
  std::size_t m = 0;
  for (double b : base) breaks[m++] = b;
  for (double kink : pdf_kinks) {
    const double x = (t - kink) / h;  // f(t - h x) kinks here
    if (x > base.front() && x < base.back()) breaks[m++] = x;
  }
  std::sort(breaks, breaks + m);
  return gauss_legendre_pieces(
      [&](double x) { return k(x) * pdf(t - h * x); },
      std::span<const double>(breaks, m));
}

double convolve_with_density(const Kernel& k, double h, const Density& f, double t);

// ((K_h * K_h) * f)(t), via the closed-form self-convolution.
double double_smoothed_eval(const Kernel& k, double h, const Density& f, double t);

}  // namespace brt
