#pragma once

#include <cstddef>

// Every tolerance, threshold and default grid size used by the library lives
// here so the numbers appear exactly once.

namespace maxsemi::tol {

// Relative tolerance for the psi scaling identity and absolute tolerance for
// d.f.-level grid identities.
inline constexpr double identity_rel = 1e-12;
inline constexpr double identity_abs = 1e-12;

// Parameter consistency at construction: a*b^{-alpha} = 1 (Frechet),
// a*b^{alpha} = 1 (Weibull), and period = |ln b|.
inline constexpr double param_consistency = 1e-12;

// Slack allowed when checking the slope condition h' vs alpha*h on the grid.
inline constexpr double slope_margin = 1e-12;

// Adjacent decrease beyond this counts as a monotonicity violation.
inline constexpr double monotone_step = 1e-12;

// Grid-end limits for a support-spanning d.f. check.
inline constexpr double df_lower = 0.01;
inline constexpr double df_upper = 0.99;

// Complete-monotonicity proxy: signed finite differences may dip this far
// below zero before an order is declared failed.
inline constexpr double cm_margin = 1e-10;

// Bisection bracket width, in log coordinates, for quantile root searches.
inline constexpr double quantile_bracket = 1e-13;

// Agreement required between closed-form and root-search quantiles, and for
// quantile/cdf round trips.
inline constexpr double quantile_agreement = 1e-10;

// Kolmogorov-Smirnov coefficient for the 5% level: one-sample threshold is
// 1.36/sqrt(n), two-sample 1.36*sqrt((n+m)/(n*m)).
inline constexpr double ks_coefficient = 1.36;

// Allowed mismatch when a scale must coincide with a law's own b (or p with
// 1/a) in process constructions.
inline constexpr double scale_match = 1e-9;

// Denominator bound and precision for the rational-ratio probe used by the
// constancy diagnostic.
inline constexpr int rational_max_den = 64;
inline constexpr double rational_eps = 1e-9;

}  // namespace maxsemi::tol

namespace maxsemi::grids {

// Dense per-period grid for positivity/slope validation of a level function.
inline constexpr std::size_t validity_per_period = 4096;

// Default number of points for three-period log-spaced identity grids.
inline constexpr std::size_t identity_default = 4096;

// Support-spanning grid for d.f. monotonicity checks.
inline constexpr std::size_t cdf_monotone = 10000;

// Minimum size of the geometric s-grid for the CM proxy, and its default
// span.
inline constexpr std::size_t cm_points = 64;
inline constexpr double cm_s_lo = 1e-3;
inline constexpr double cm_s_hi = 1e3;

}  // namespace maxsemi::grids
