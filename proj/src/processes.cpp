#include "brt/processes.hpp"

#include <cmath>
#include <stdexcept>

#include "brt/errors.hpp"
#include "brt/rng.hpp"

namespace brt {

ErrorProcess::ErrorProcess(Density marginal_, double rho_)
    : marginal(std::move(marginal_)), rho(rho_) {
  if (!(rho >= 0.0 && rho < 1.0))
    throw std::invalid_argument("ErrorProcess: rho must be in [0, 1)");
}

double mixing_bound(const ErrorProcess& p, int tau) {
  if (tau < 1) throw std::invalid_argument("mixing_bound: tau must be >= 1");
  return 0.25 * std::pow(std::fabs(p.rho), tau);
}

std::vector<double> simulate_errors(const ErrorProcess& p, std::size_t n,
                                    std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("simulate_errors: n must be >= 1");
  Rng rng(seed);
  std::vector<double> eps(n);
  double e = rng.standard_normal();  // exact stationary start
  const double innov = std::sqrt(1.0 - p.rho * p.rho);
  const bool identity = p.marginal.name() == DensityName::std_normal;
  for (std::size_t i = 0; i < n; ++i) {
    e = p.rho * e + innov * rng.standard_normal();
    eps[i] = identity ? e : p.marginal.quantile(normal_cdf(e));
  }
  return eps;
}

double marginal_density_eval(const ErrorProcess& p, double t) {
  return p.marginal.pdf(t);
}

CovarianceCheck covariance_inequality_check(const ErrorProcess& p, int tau,
                                            const BoundedFunctional& g1,
                                            const BoundedFunctional& g2,
                                            std::size_t reps, std::uint64_t seed) {
  if (tau < 1) throw std::invalid_argument("covariance_inequality_check: tau >= 1");
  if (reps < 100) throw std::invalid_argument("covariance_inequality_check: reps >= 100");
  if (!(std::isfinite(g1.bound) && g1.bound > 0.0 && std::isfinite(g2.bound) &&
        g2.bound > 0.0))
    throw std::invalid_argument(
        "covariance_inequality_check: functionals must declare finite positive bounds");

  std::vector<double> xi(reps), eta(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    const auto eps = simulate_errors(p, static_cast<std::size_t>(tau) + 1,
                                     derive_seed(seed, 0, r));
    xi[r] = g1.fn(eps.front());
    eta[r] = g2.fn(eps.back());
    if (std::fabs(xi[r]) > g1.bound + 1e-12 || std::fabs(eta[r]) > g2.bound + 1e-12)
      throw std::invalid_argument(
          "covariance_inequality_check: functional exceeded its declared bound");
  }
  const auto nrep = static_cast<double>(reps);
  double mx = 0, my = 0, mxy = 0;
  for (std::size_t r = 0; r < reps; ++r) {
    mx += xi[r];
    my += eta[r];
    mxy += xi[r] * eta[r];
  }
  mx /= nrep;
  my /= nrep;
  mxy /= nrep;
  const double cov = mxy - mx * my;
  // influence-function variance of the covariance estimator
  double s2 = 0;
  for (std::size_t r = 0; r < reps; ++r) {
    const double u = xi[r] * eta[r] - my * xi[r] - mx * eta[r] + mx * my - cov;
    s2 += u * u;
  }
  s2 /= (nrep - 1.0);

  CovarianceCheck out;
  out.cov_estimate = std::fabs(cov);
  out.std_error = std::sqrt(s2 / nrep);
  out.bound = 4.0 * g1.bound * g2.bound * mixing_bound(p, tau);
  out.tau = tau;
  out.reps = reps;
  out.pass = out.cov_estimate - 3.0 * out.std_error <= out.bound;
  return out;
}

Model linear_ar_model() {
  Model m;
  m.name = "linear_ar";
  m.p = 1;
  m.q = 1;
  m.value = [](std::span<const double> th, std::span<const double> lags) {
    return th[0] * lags[0];
  };
  m.gradient = [](std::span<const double>, std::span<const double> lags,
                  std::span<double> g) { g[0] = lags[0]; };
  m.admissible = [](std::span<const double> th) { return std::fabs(th[0]) < 1.0; };
  return m;
}

Model expar_model() {
  Model m;
  m.name = "expar";
  m.p = 1;
  m.q = 3;
  m.value = [](std::span<const double> th, std::span<const double> lags) {
    const double x = lags[0];
    return (th[0] + th[1] * std::exp(-th[2] * x * x)) * x;
  };
  m.gradient = [](std::span<const double> th, std::span<const double> lags,
                  std::span<double> g) {
    const double x = lags[0];
    const double e = std::exp(-th[2] * x * x);
    g[0] = x;
    g[1] = x * e;
    g[2] = -th[1] * x * x * x * e;
  };
  // |theta1| + |theta2| < 1 keeps the recursion stable; theta3 > 0 keeps the
  // exponential factor bounded
  m.admissible = [](std::span<const double> th) {
    return std::fabs(th[0]) + std::fabs(th[1]) < 1.0 && th[2] > 0.0;
  };
  return m;
}

Model model_from_string(std::string_view name) {
  if (name == "linear_ar") return linear_ar_model();
  if (name == "expar") return expar_model();
  throw ConfigError("unknown model '" + std::string(name) + "'");
}

SampleSeries simulate_series(const Model& model, std::span<const double> theta,
                             const ErrorProcess& errors, std::size_t n,
                             int burn_in, std::uint64_t seed) {
  if (static_cast<int>(theta.size()) != model.q)
    throw std::invalid_argument("simulate_series: theta dimension mismatch");
  if (!model.admissible(theta))
    throw std::invalid_argument(
        "simulate_series: theta outside the admissible (stationary) region");
  if (burn_in < 500)
    throw std::invalid_argument("simulate_series: burn_in must be >= 500");
  if (n < 1) throw std::invalid_argument("simulate_series: n must be >= 1");

  const auto p = static_cast<std::size_t>(model.p);
  const std::size_t total = static_cast<std::size_t>(burn_in) + p + n;
  const auto eps = simulate_errors(errors, total, seed);

  std::vector<double> x(total + p, 0.0);  // p zero initial lags in front
  for (std::size_t t = 0; t < total; ++t) {
    const auto lags = std::span<const double>(x).subspan(t, p);
    const double v = model.value(theta, lags) + eps[t];
    if (!(std::fabs(v) <= 1e12))
      throw NumericalError("simulate_series: |X| exceeded 1e12 (non-stationary escape)");
    x[t + p] = v;
  }

  SampleSeries s;
  s.p = model.p;
  s.burn_in = burn_in;
  s.seed = seed;
  s.theta_true.assign(theta.begin(), theta.end());
  // keep X_{1-p}..X_n and the errors driving X_1..X_n
  s.values.assign(x.end() - static_cast<std::ptrdiff_t>(n + p), x.end());
  s.errors.assign(eps.end() - static_cast<std::ptrdiff_t>(n), eps.end());
  return s;
}

}  // namespace brt
