#include "maxsemi/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace maxsemi {

double ecdf(std::span<const double> samples, double x) {
  if (samples.empty()) throw EmptyInputError("ecdf: samples must be nonempty");
  std::size_t count = 0;
  for (const double s : samples)
    if (s <= x) ++count;
  return static_cast<double>(count) / static_cast<double>(samples.size());
}

KSReport ks_one_sample(std::vector<double> samples,
                       const std::function<double(double)>& cdf) {
  if (samples.empty())
    throw EmptyInputError("ks_one_sample: samples must be nonempty");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::abs((i + 1) / n - f));
    d = std::max(d, std::abs(i / n - f));
  }
  KSReport report;
  report.statistic = d;
  report.n = samples.size();
  report.threshold = tol::ks_coefficient / std::sqrt(n);
  report.pass = d < report.threshold;
  return report;
}

KSReport ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty())
    throw EmptyInputError("ks_two_sample: both samples must be nonempty");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  KSReport report;
  report.statistic = d;
  report.n = std::min(a.size(), b.size());
  report.threshold = tol::ks_coefficient * std::sqrt((na + nb) / (na * nb));
  report.pass = d < report.threshold;
  return report;
}

MonotoneDFReport monotone_df_check(const std::function<double(double)>& df,
                                   std::span<const double> grid) {
  if (grid.size() < 2)
    throw DomainError("monotone_df_check: grid needs at least 2 points");
  MonotoneDFReport report;
  double prev = df(grid[0]);
  report.lower_value = prev;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = df(grid[i]);
    const double decrease = prev - cur;
    if (decrease > tol::monotone_step) {
      ++report.violations;
      report.max_decrease = std::max(report.max_decrease, decrease);
    }
    prev = cur;
  }
  report.upper_value = prev;
  report.limits_ok = report.lower_value <= tol::df_lower &&
                     report.upper_value >= tol::df_upper;
  report.pass = report.violations == 0 && report.limits_ok;
  return report;
}

CmProxyReport cm_proxy(const std::function<double(double)>& f,
                       std::span<const double> s_grid, int max_order) {
  if (s_grid.size() < grids::cm_points)
    throw DomainError("cm_proxy: s grid needs at least 64 points");
  if (max_order < 0 || max_order > 8)
    throw DomainError("cm_proxy: max_order must lie in [0, 8]");

  CmProxyReport report;
  report.all_pass = true;
  for (int k = 0; k <= max_order; ++k) {
    // Binomial row C(k, 0..k).
    std::vector<double> binom(static_cast<std::size_t>(k) + 1, 1.0);
    for (int j = 1; j <= k; ++j)
      binom[j] = binom[j - 1] * (k - j + 1) / j;

    double worst = std::numeric_limits<double>::infinity();
    for (const double s : s_grid) {
      const double step = 0.1 * std::max(s, 1e-3);
      // (-1)^k Delta^k f(s) == sum_j (-1)^j C(k,j) f(s + j*step)
      double acc = 0.0;
      for (int j = 0; j <= k; ++j) {
        const double term = binom[j] * f(s + j * step);
        acc += (j % 2 == 0) ? term : -term;
      }
      worst = std::min(worst, acc);
    }
    CmOrderResult result;
    result.order = k;
    result.worst = worst;
    result.pass = worst >= -tol::cm_margin;
    report.all_pass = report.all_pass && result.pass;
    report.orders.push_back(result);
  }
  return report;
}

std::vector<double> geometric_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo))
    throw DomainError("geometric_grid: need 0 < lo < hi");
  if (n < 2) throw DomainError("geometric_grid: need at least 2 points");
  std::vector<double> grid;
  grid.reserve(n);
  const double ratio = hi / lo;
  for (std::size_t i = 0; i < n; ++i)
    grid.push_back(lo *
                   std::pow(ratio, static_cast<double>(i) / (n - 1)));
  return grid;
}

}  // namespace maxsemi
