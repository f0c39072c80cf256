#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "maxsemi/errors.hpp"
#include "maxsemi/tolerances.hpp"

namespace maxsemi {

struct KSReport {
  double statistic = 0.0;
  std::size_t n = 0;  // min(n, m) for the two-sample variant
  double threshold = 0.0;
  bool pass = false;
};

// Fraction of samples <= x. EmptyInputError on an empty span.
double ecdf(std::span<const double> samples, double x);

// Sup distance between the sample ECDF and a reference cdf, evaluated from
// both sides of each jump; threshold 1.36/sqrt(n) (5% level).
KSReport ks_one_sample(std::vector<double> samples,
                       const std::function<double(double)>& cdf);

// Sup distance between two sample ECDFs; threshold 1.36*sqrt((n+m)/(n*m)).
KSReport ks_two_sample(std::vector<double> a, std::vector<double> b);

struct MonotoneDFReport {
  std::size_t violations = 0;   // adjacent decreases beyond monotone_step
  double max_decrease = 0.0;
  double lower_value = 0.0;     // G at the first/last grid point
  double upper_value = 0.0;
  bool limits_ok = false;       // lower <= df_lower and upper >= df_upper
  bool pass = false;            // violations == 0 && limits_ok
};

// Walks G along an ascending grid counting decreases and checking that the
// grid spans the distribution (limits close to 0 and 1). A degenerate or
// out-of-range G fails through limits_ok.
MonotoneDFReport monotone_df_check(const std::function<double(double)>& df,
                                   std::span<const double> grid);

struct CmOrderResult {
  int order = 0;
  double worst = 0.0;  // min over the grid of the signed difference
  bool pass = false;
};

struct CmProxyReport {
  std::vector<CmOrderResult> orders;
  bool all_pass = false;
};

// Finite-difference proxy for complete monotonicity: at each grid point s a
// uniform stencil of relative step 10% feeds the alternating difference
// sum_j (-1)^j C(k,j) f(s + j*step), which must stay above -cm_margin for
// every order k = 0..max_order. Requires a geometric grid of >= cm_points
// points and max_order <= 8.
CmProxyReport cm_proxy(const std::function<double(double)>& f,
                       std::span<const double> s_grid, int max_order);

// n log-spaced points from lo to hi (both > 0), ascending.
std::vector<double> geometric_grid(double lo, double hi, std::size_t n);

}  // namespace maxsemi
