#include "brt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "brt/densities.hpp"

namespace brt {

double mean(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("mean: empty sample");
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double sample_variance(std::span<const double> x) {
  if (x.size() < 2) throw std::invalid_argument("sample_variance: need n >= 2");
  const double m = mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size() - 1);
}

MomentSummary moments(std::span<const double> x) {
  const double m = mean(x);
  const auto n = static_cast<double>(x.size());
  double m2 = 0, m3 = 0, m4 = 0;
  for (double v : x) {
    const double d = v - m;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  MomentSummary out;
  out.mean = m;
  out.variance = m2 * n / (n - 1.0);
  out.skewness = m2 > 0 ? m3 / std::pow(m2, 1.5) : 0.0;
  out.excess_kurtosis = m2 > 0 ? m4 / (m2 * m2) - 3.0 : 0.0;
  return out;
}

double median(std::vector<double> x) {
  if (x.empty()) throw std::invalid_argument("median: empty sample");
  std::sort(x.begin(), x.end());
  const std::size_t n = x.size();
  return n % 2 ? x[n / 2] : 0.5 * (x[n / 2 - 1] + x[n / 2]);
}

double ks_distance(std::vector<double> sample,
                   const std::function<double(double)>& cdf) {
  if (sample.empty()) throw std::invalid_argument("ks_distance: empty sample");
  std::sort(sample.begin(), sample.end());
  const auto n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double F = cdf(sample[i]);
    d = std::max(d, F - static_cast<double>(i) / n);
    d = std::max(d, static_cast<double>(i + 1) / n - F);
  }
  return d;
}

double ks_distance_to_normal(std::vector<double> sample) {
  return ks_distance(std::move(sample), [](double v) { return normal_cdf(v); });
}

namespace {

std::vector<double> ranks_of(std::span<const double> v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t pos = 0; pos < idx.size(); ++pos)
    r[idx[pos]] = static_cast<double>(pos + 1);
  // midranks for ties
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    if (j > i) {
      const double mid = 0.5 * (r[idx[i]] + r[idx[j]]);
      for (std::size_t t = i; t <= j; ++t) r[idx[t]] = mid;
    }
    i = j + 1;
  }
  return r;
}

double pearson(std::span<const double> a, std::span<const double> b) {
  const double ma = mean(a), mb = mean(b);
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa <= 0 || sbb <= 0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

}  // namespace

SpearmanTrend spearman_trend(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("spearman_trend: need two samples of equal size >= 2");
  const auto rx = ranks_of(x);
  const auto ry = ranks_of(y);
  const double rho = pearson(rx, ry);
  const std::size_t m = x.size();
  SpearmanTrend out{rho, 1.0};
  if (m <= 8) {
    // exact permutation null
    std::vector<double> perm(ry);
    std::sort(perm.begin(), perm.end());
    std::size_t total = 0, ge = 0;
    do {
      ++total;
      if (pearson(rx, perm) >= rho - 1e-12) ++ge;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.p_value = static_cast<double>(ge) / static_cast<double>(total);
  } else {
    // t approximation, upper tail via normal on the t scale (adequate for
    // the battery sizes used here)
    const double t = rho * std::sqrt((static_cast<double>(m) - 2.0) /
                                     std::max(1e-12, 1.0 - rho * rho));
    out.p_value = 1.0 - normal_cdf(t);
  }
  return out;
}

}  // namespace brt
