#include "brt/estimation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace brt {

std::string_view to_string(FitStatus s) {
  switch (s) {
    case FitStatus::converged: return "converged";
    case FitStatus::max_iterations: return "max_iterations";
    case FitStatus::no_decrease: return "no_decrease";
    case FitStatus::singular: return "singular";
  }
  return "?";
}

std::vector<double> residuals(const Model& model, std::span<const double> theta,
                              const SampleSeries& series) {
  const std::size_t n = series.n();
  std::vector<double> r(n);
  for (std::size_t i = 1; i <= n; ++i)
    r[i - 1] = series.x_at(i) - model.value(theta, series.lags_at(i));
  return r;
}

namespace {

double sse_of(const Model& model, std::span<const double> theta,
              const SampleSeries& series) {
  double s = 0.0;
  const std::size_t n = series.n();
  for (std::size_t i = 1; i <= n; ++i) {
    const double r = series.x_at(i) - model.value(theta, series.lags_at(i));
    s += r * r;
  }
  return s;
}

}  // namespace

FitResult fit_cls(const Model& model, const SampleSeries& series,
                  std::span<const double> theta0) {
  const std::size_t n = series.n();
  const auto q = static_cast<std::size_t>(model.q);
  if (static_cast<int>(theta0.size()) != model.q)
    throw std::invalid_argument("fit_cls: theta0 dimension mismatch");
  if (n < 10 * q)
    throw std::invalid_argument("fit_cls: series length must be >= 10 q");

  FitResult out;
  out.theta_hat.assign(theta0.begin(), theta0.end());
  double sse = sse_of(model, out.theta_hat, series);

  Eigen::MatrixXd J(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(q));
  Eigen::VectorXd r(static_cast<Eigen::Index>(n));
  std::vector<double> grad(q), cand(q);

  constexpr int kMaxIterations = 200;
  constexpr int kMaxHalvings = 30;
  constexpr double kStepTol = 1e-10;
  constexpr double kMaxCondition = 1e12;

  out.status = FitStatus::max_iterations;
  for (int it = 0; it < kMaxIterations; ++it) {
    for (std::size_t i = 1; i <= n; ++i) {
      const auto lags = series.lags_at(i);
      r(static_cast<Eigen::Index>(i - 1)) =
          series.x_at(i) - model.value(out.theta_hat, lags);
      model.gradient(out.theta_hat, lags, grad);
      for (std::size_t j = 0; j < q; ++j)
        J(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j)) = grad[j];
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > kMaxCondition) {
      out.status = FitStatus::singular;
      break;
    }
    const Eigen::VectorXd step = svd.solve(r);

    // backtracking: accept the first step that does not increase sse
    double t = 1.0;
    bool accepted = false;
    double cand_sse = sse;
    for (int half = 0; half <= kMaxHalvings; ++half) {
      for (std::size_t j = 0; j < q; ++j)
        cand[j] = out.theta_hat[j] + t * step(static_cast<Eigen::Index>(j));
      cand_sse = sse_of(model, cand, series);
      if (cand_sse <= sse) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      out.status = FitStatus::no_decrease;
      break;
    }

    double moved = 0.0;
    for (std::size_t j = 0; j < q; ++j) {
      const double d = cand[j] - out.theta_hat[j];
      moved += d * d;
    }
    moved = std::sqrt(moved);

    out.theta_hat = cand;
    sse = cand_sse;
    out.sse_trace.push_back(sse);
    ++out.iterations;

    if (moved < kStepTol) {
      out.status = FitStatus::converged;
      out.converged = true;
      break;
    }
  }

  out.residuals = residuals(model, out.theta_hat, series);
  double s = 0.0;
  for (double v : out.residuals) s += v * v;
  out.sse = s;
  return out;
}

ExponentEstimate gradient_sum_exponent(const Model& model,
                                       std::span<const double> theta,
                                       const std::vector<SampleSeries>& battery) {
  const auto q = static_cast<std::size_t>(model.q);
  // per n, per component: |sum_i Y_ij| across seeds
  std::map<std::size_t, std::vector<std::vector<double>>> by_n;
  std::vector<double> grad(q);
  for (const auto& s : battery) {
    std::vector<double> sums(q, 0.0);
    for (std::size_t i = 1; i <= s.n(); ++i) {
      model.gradient(theta, s.lags_at(i), grad);
      for (std::size_t j = 0; j < q; ++j) sums[j] += grad[j];
    }
    auto& slot = by_n[s.n()];
    slot.resize(q);
    for (std::size_t j = 0; j < q; ++j) slot[j].push_back(std::fabs(sums[j]));
  }
  if (by_n.size() < 2)
    throw std::invalid_argument(
        "gradient_sum_exponent: insufficient n grid (need >= 2 distinct n)");

  ExponentEstimate out;
  out.component_slopes.resize(q);
  for (std::size_t j = 0; j < q; ++j) {
    // least-squares slope of log median vs log n
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [n, comps] : by_n) {
      const double x = std::log(static_cast<double>(n));
      const double y = std::log(std::max(median(comps[j]), 1e-300));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const auto m = static_cast<double>(by_n.size());
    out.component_slopes[j] = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  }
  out.alpha_hat = *std::max_element(out.component_slopes.begin(),
                                    out.component_slopes.end());
  out.growth_flag = out.alpha_hat >= 0.9;
  return out;
}

TrendDiagnostic lil_diagnostic(const std::vector<LilSample>& fits) {
  std::map<std::size_t, std::vector<double>> by_n;
  for (const auto& f : fits) {
    const auto dn = static_cast<double>(f.n);
    by_n[f.n].push_back(std::sqrt(dn / std::log(std::log(dn))) * f.theta_err);
  }
  if (by_n.size() < 2)
    throw std::invalid_argument("lil_diagnostic: insufficient n grid (need >= 2)");

  TrendDiagnostic out;
  std::vector<double> xs, ys;
  for (auto& [n, vals] : by_n) {
    out.ns.push_back(n);
    out.medians.push_back(median(vals));
    xs.push_back(static_cast<double>(n));
    ys.push_back(out.medians.back());
  }
  out.trend = spearman_trend(xs, ys);
  out.pass = out.trend.p_value > 0.05;
  return out;
}

}  // namespace brt
