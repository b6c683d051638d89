#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "brt/densities.hpp"

namespace brt {

// Stationary error stream with exact marginal `marginal` and geometric
// alpha-mixing, built from a latent Gaussian AR(1) chain e_i = rho e_{i-1} +
// sqrt(1-rho^2) z_i pushed through the Gaussian copula eps_i = F^{-1}(Phi(e_i)).
// rho = 0 gives i.i.d. draws.
struct ErrorProcess {
  ErrorProcess(Density marginal_, double rho_);
  Density marginal;
  double rho;  // in [0, 1)
};

// alpha(tau) <= |rho|^tau / 4 for the latent Gaussian chain
// (Kolmogorov-Rozanov), inherited by instantaneous transforms.
double mixing_bound(const ErrorProcess& p, int tau);

std::vector<double> simulate_errors(const ErrorProcess& p, std::size_t n,
                                    std::uint64_t seed);

double marginal_density_eval(const ErrorProcess& p, double t);

// A bounded functional of a single error coordinate, with its declared bound.
struct BoundedFunctional {
  std::function<double(double)> fn;
  double bound;
  std::string label;
};

struct CovarianceCheck {
  double cov_estimate;  // |cov(g1(eps_1), g2(eps_{1+tau}))| Monte Carlo estimate
  double std_error;
  double bound;  // 4 C1 C2 alpha(tau)
  int tau;
  std::size_t reps;
  bool pass;  // estimate - 3 SE <= bound
};

CovarianceCheck covariance_inequality_check(const ErrorProcess& p, int tau,
                                            const BoundedFunctional& g1,
                                            const BoundedFunctional& g2,
                                            std::size_t reps, std::uint64_t seed);

// Autoregression family r_theta. `lags` is passed in ascending time order:
// lags.back() = X_{i-1}, lags.front() = X_{i-p}.
struct Model {
  std::string name;
  int p = 1;  // lag order
  int q = 1;  // parameter dimension
  std::function<double(std::span<const double>, std::span<const double>)> value;
  std::function<void(std::span<const double>, std::span<const double>,
                     std::span<double>)>
      gradient;
  std::function<bool(std::span<const double>)> admissible;
};

Model linear_ar_model();  // r(x) = theta1 x,                    p=1, q=1
Model expar_model();      // r(x) = (theta1 + theta2 e^{-theta3 x^2}) x, p=1, q=3
Model model_from_string(std::string_view name);  // throws ConfigError

struct SampleSeries {
  std::vector<double> values;  // X_{1-p}, ..., X_n (size n + p)
  std::vector<double> errors;  // eps_1, ..., eps_n (oracle side)
  std::vector<double> theta_true;
  std::uint64_t seed = 0;
  int burn_in = 0;
  int p = 1;

  std::size_t n() const { return errors.size(); }
  // lags of X_i for i in 1..n, ascending time
  std::span<const double> lags_at(std::size_t i) const {
    return std::span<const double>(values).subspan(i - 1, static_cast<std::size_t>(p));
  }
  double x_at(std::size_t i) const { return values[i - 1 + static_cast<std::size_t>(p)]; }
};

// Recursion from zero initial lags; the first `burn_in` steps are discarded
// and the retained errors stay aligned with X_1..X_n. Throws
// std::invalid_argument for inadmissible theta or burn_in < 500, and
// NumericalError if |X_i| exceeds 1e12.
SampleSeries simulate_series(const Model& model, std::span<const double> theta,
                             const ErrorProcess& errors, std::size_t n,
                             int burn_in, std::uint64_t seed);

}  // namespace brt
