#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace brt {

double normal_pdf(double x);
double normal_cdf(double x);
// Wichura's AS241 inverse normal, |error| < 1e-15 on (0,1).
double normal_quantile(double p);

enum class DensityName { std_normal, laplace_unit_var, normal_mixture };

std::string_view to_string(DensityName name);

// A unit-variance error density with evaluable pdf/cdf/quantile.
//
// std_normal        N(0,1)
// laplace_unit_var  Laplace with b = 1/sqrt(2); not differentiable at 0,
//                   intended as an alternative-hypothesis generator
// normal_mixture    0.5 N(-mu, sigma^2) + 0.5 N(mu, sigma^2), scaled to unit
//                   variance; smooth everywhere
class Density {
 public:
  static Density std_normal();
  static Density laplace_unit_var();
  static Density normal_mixture(double mu, double sigma);

  double pdf(double x) const;
  double cdf(double x) const;
  double quantile(double p) const;  // throws std::invalid_argument outside (0,1)

  DensityName name() const { return name_; }
  const std::vector<double>& params() const { return params_; }
  // pdf kink locations (quadrature pieces are split there)
  std::span<const double> kinks() const { return kinks_; }
  bool twice_differentiable() const { return kinks_.empty(); }

  // range outside which the density mass is below eps per tail
  double support_lo(double eps = 1e-8) const { return quantile(eps); }
  double support_hi(double eps = 1e-8) const { return quantile(1.0 - eps); }

 private:
  Density(DensityName name, std::vector<double> params);

  DensityName name_;
  std::vector<double> params_;
  std::vector<double> kinks_;
  double mixture_scale_ = 0.0;  // normal_mixture only
};

// name: "std_normal" | "laplace_unit_var" | "normal_mixture" (params mu,sigma;
// defaults 1,1). Throws ConfigError on unknown names or bad params.
Density density_from_string(std::string_view name,
                            std::span<const double> params = {});

bool operator==(const Density& a, const Density& b);

}  // namespace brt
