#include "brt/densities.hpp"

#include <cmath>
#include <stdexcept>

#include "brt/errors.hpp"

namespace brt {

namespace {
constexpr double kInvSqrt2Pi = 0.3989422804014327;
constexpr double kSqrt2 = 1.4142135623730951;
}  // namespace

double normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

// AS241 (Wichura 1988), the PPND16 variant.
double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("normal_quantile: p must be in (0,1)");
  const double q = p - 0.5;
  double r;
  if (std::fabs(q) <= 0.425) {
    r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                 6.7265770927008700853e+4) *
                    r +
                4.5921953931549871457e+4) *
                   r +
               1.3731693765509461125e+4) *
                  r +
              1.9715909503065514427e+3) *
                 r +
             1.3314166789178437745e+2) *
                r +
            3.3871328727963666080e+0) /
           (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                 3.9307895800092710610e+4) *
                    r +
                2.1213794301586595867e+4) *
                   r +
               5.3941960214247511077e+3) *
                  r +
              6.8718700749205790830e+2) *
                 r +
             4.2313330701600911252e+1) *
                r +
            1.0);
  }
  r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                2.41780725177450611770e-1) *
                   r +
               1.27045825245236838258e+0) *
                  r +
              3.64784832476320460504e+0) *
                 r +
             5.76949722146069140550e+0) *
                r +
            4.63033784615654529590e+0) *
               r +
           1.42343711074968357734e+0) /
          (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                1.51986665636164571966e-2) *
                   r +
               1.48103976427480074590e-1) *
                  r +
              6.89767334985100004550e-1) *
                 r +
             1.67638483018380384940e+0) *
                r +
            2.05319162663775882187e+0) *
               r +
           1.0);
  } else {
    r -= 5.0;
    val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                1.24266094738807843860e-3) *
                   r +
               2.65321895265761230930e-2) *
                  r +
              2.96560571828504891230e-1) *
                 r +
             1.78482653991729133580e+0) *
                r +
            5.46378491116411436990e+0) *
               r +
           6.65790464350110377720e+0) /
          (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                1.84631831751005468180e-5) *
                   r +
               7.86869131145613259100e-4) *
                  r +
              1.48753612908506148525e-2) *
                 r +
             1.36929880922735805310e-1) *
                r +
            5.99832206555887937690e-1) *
               r +
           1.0);
  }
  return q < 0.0 ? -val : val;
}

std::string_view to_string(DensityName name) {
  switch (name) {
    case DensityName::std_normal: return "std_normal";
    case DensityName::laplace_unit_var: return "laplace_unit_var";
    case DensityName::normal_mixture: return "normal_mixture";
  }
  return "?";
}

namespace {
constexpr double kLaplaceB = 0.7071067811865476;  // 1/sqrt(2), unit variance

double mixture_pdf_raw(double v, double mu, double sigma) {
  return 0.5 / sigma * (normal_pdf((v + mu) / sigma) + normal_pdf((v - mu) / sigma));
}
}  // namespace

Density::Density(DensityName name, std::vector<double> params)
    : name_(name), params_(std::move(params)) {
  if (name_ == DensityName::laplace_unit_var) kinks_ = {0.0};
  if (name_ == DensityName::normal_mixture) {
    const double mu = params_[0], sigma = params_[1];
    if (sigma <= 0.0 || mu < 0.0)
      throw ConfigError("normal_mixture requires sigma > 0 and mu >= 0");
    mixture_scale_ = std::sqrt(mu * mu + sigma * sigma);
  }
}

Density Density::std_normal() { return Density(DensityName::std_normal, {}); }

Density Density::laplace_unit_var() {
  return Density(DensityName::laplace_unit_var, {});
}

Density Density::normal_mixture(double mu, double sigma) {
  return Density(DensityName::normal_mixture, {mu, sigma});
}

double Density::pdf(double x) const {
  switch (name_) {
    case DensityName::std_normal:
      return normal_pdf(x);
    case DensityName::laplace_unit_var:
      return std::exp(-std::fabs(x) / kLaplaceB) / (2.0 * kLaplaceB);
    case DensityName::normal_mixture: {
      const double s = mixture_scale_;
      return s * mixture_pdf_raw(s * x, params_[0], params_[1]);
    }
  }
  return 0.0;
}

double Density::cdf(double x) const {
  switch (name_) {
    case DensityName::std_normal:
      return normal_cdf(x);
    case DensityName::laplace_unit_var:
      return x < 0.0 ? 0.5 * std::exp(x / kLaplaceB)
                     : 1.0 - 0.5 * std::exp(-x / kLaplaceB);
    case DensityName::normal_mixture: {
      const double v = mixture_scale_ * x;
      return 0.5 * (normal_cdf((v + params_[0]) / params_[1]) +
                    normal_cdf((v - params_[0]) / params_[1]));
    }
  }
  return 0.0;
}

double Density::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("Density::quantile: p must be in (0,1)");
  switch (name_) {
    case DensityName::std_normal:
      return normal_quantile(p);
    case DensityName::laplace_unit_var:
      return p <= 0.5 ? kLaplaceB * std::log(2.0 * p)
                      : -kLaplaceB * std::log(2.0 * (1.0 - p));
    case DensityName::normal_mixture: {
      // monotone cdf: bisection then Newton polish
      double lo = -40.0, hi = 40.0;
      for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (cdf(mid) < p ? lo : hi) = mid;
      }
      double x = 0.5 * (lo + hi);
      for (int i = 0; i < 3; ++i) {
        const double d = pdf(x);
        if (d <= 0.0) break;
        x -= (cdf(x) - p) / d;
      }
      return x;
    }
  }
  return 0.0;
}

Density density_from_string(std::string_view name, std::span<const double> params) {
  if (name == "std_normal") return Density::std_normal();
  if (name == "laplace_unit_var") return Density::laplace_unit_var();
  if (name == "normal_mixture") {
    if (params.empty()) return Density::normal_mixture(1.0, 1.0);
    if (params.size() != 2)
      throw ConfigError("normal_mixture takes params mu,sigma");
    return Density::normal_mixture(params[0], params[1]);
  }
  throw ConfigError("unknown density '" + std::string(name) + "'");
}

bool operator==(const Density& a, const Density& b) {
  return a.name() == b.name() && a.params() == b.params();
}

}  // namespace brt
