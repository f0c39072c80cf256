#include "maxsemi/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace maxsemi {

namespace detail {

double power_uniform(double u, double tau) {
  if (!(u > 0.0 && u < 1.0))
    throw DomainError("power_uniform: u must lie in (0,1)");
  if (!(tau > 0.0)) throw DomainError("power_uniform: tau must be positive");
  const double p = std::pow(u, 1.0 / tau);
  const double lo = std::numeric_limits<double>::min();
  const double hi = 1.0 - 0x1.0p-53;
  return std::clamp(p, lo, hi);
}

namespace {

// Saturation for psi targets so extreme uniforms still map to finite support
// points.
double clamp_target(double target) {
  return std::clamp(target, 1e-300, 1e300);
}

double point_at(const PsiFunction& psi, double t) {
  return psi.branch() == Branch::frechet ? std::exp(t) : -std::exp(-t);
}

}  // namespace

double quantile_root_search(const PsiFunction& psi, double target) {
  target = clamp_target(target);
  const double T = psi.level().period();
  const auto psi_at = [&](double t) { return psi.value(point_at(psi, t)); };

  // psi is strictly decreasing in t on both branches, and one b-scaling
  // step divides psi by a while advancing t by exactly T. Walk whole
  // periods until the target is bracketed, then bisect. |t| is capped so
  // x = e^{|t|} stays finite; the cap is far outside any representable
  // uniform's reach.
  constexpr double t_cap = 660.0;
  double lo = 0.0, hi = 0.0;
  if (psi_at(0.0) > target) {
    do {
      lo = hi;
      hi += T;
    } while (psi_at(hi) > target && hi < t_cap);
  } else {
    do {
      hi = lo;
      lo -= T;
    } while (psi_at(lo) <= target && lo > -t_cap);
  }
  while (hi - lo > tol::quantile_bracket) {
    const double mid = 0.5 * (lo + hi);
    (psi_at(mid) > target ? lo : hi) = mid;
  }
  return point_at(psi, 0.5 * (lo + hi));
}

double quantile_from_psi_target(const PsiFunction& psi, double target) {
  target = clamp_target(target);
  const PeriodicLevel& h = psi.level();
  if (h.is_constant()) {
    const double lam = h.base();
    return psi.branch() == Branch::frechet
               ? std::pow(lam / target, 1.0 / psi.alpha())
               : -std::pow(target / lam, 1.0 / psi.alpha());
  }
  return quantile_root_search(psi, target);
}

}  // namespace detail

double UnivariateDF::quantile_power(double u, double tau) const {
  return quantile(detail::power_uniform(u, tau));
}

std::vector<double> sample(const UnivariateDF& df, std::size_t n,
                           std::uint64_t seed) {
  if (n == 0) throw DomainError("sample: n must be >= 1");
  SplitMix64 rng = substream(seed, 0);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(df.quantile(rng.uniform01()));
  return out;
}

std::vector<double> sample_power(const UnivariateDF& df, double tau,
                                 std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("sample_power: n must be >= 1");
  if (!(tau > 0.0)) throw DomainError("sample_power: tau must be positive");
  SplitMix64 rng = substream(seed, 0);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(df.quantile_power(rng.uniform01(), tau));
  return out;
}

double support_bottom(Branch branch) {
  return branch == Branch::frechet
             ? 0.0
             : -std::numeric_limits<double>::infinity();
}

std::vector<double> support_grid(Branch branch, std::size_t n, double abs_lo,
                                 double abs_hi) {
  std::vector<double> grid = geometric_grid(abs_lo, abs_hi, n);
  if (branch == Branch::weibull) {
    // Mirror to the negative axis, keeping ascending order.
    std::reverse(grid.begin(), grid.end());
    for (double& x : grid) x = -x;
  }
  return grid;
}

MaxSemiStableDF::MaxSemiStableDF(PsiFunction psi) : psi_(std::move(psi)) {}

double MaxSemiStableDF::cdf(double x) const {
  if (psi_.branch() == Branch::frechet) {
    if (x <= 0.0) return 0.0;
  } else if (x >= 0.0) {
    return 1.0;
  }
  return std::exp(-psi_.value(x));
}

double MaxSemiStableDF::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0))
    throw DomainError("quantile: u must lie in (0,1)");
  return detail::quantile_from_psi_target(psi_, -std::log(u));
}

double MaxSemiStableDF::quantile_power(double u, double tau) const {
  if (!(u > 0.0 && u < 1.0))
    throw DomainError("quantile_power: u must lie in (0,1)");
  if (!(tau > 0.0)) throw DomainError("quantile_power: tau must be positive");
  return detail::quantile_from_psi_target(psi_, -std::log(u) / tau);
}

CofactorDF::CofactorDF(PsiFunction psi, double c, double tau)
    : base_(std::move(psi)), c_(c), tau_(tau) {
  if (!(c_ > 0.0)) throw DomainError("CofactorDF: scale c must be positive");
  if (!(tau_ > 0.0)) throw DomainError("CofactorDF: power tau must be positive");
}

double CofactorDF::cdf(double x) const {
  return std::pow(base_.cdf(c_ * x), tau_);
}

double CofactorDF::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0))
    throw DomainError("quantile: u must lie in (0,1)");
  return base_.quantile_power(u, tau_) / c_;
}

double CofactorDF::quantile_power(double u, double tau) const {
  if (!(tau > 0.0)) throw DomainError("quantile_power: tau must be positive");
  return base_.quantile_power(u, tau_ * tau) / c_;
}

CofactorResult semi_sd_cofactor_df(const MaxSemiStableDF& f, double c) {
  const PsiFunction& psi = f.psi();
  const bool frechet = psi.branch() == Branch::frechet;
  if (!std::isfinite(c) ||
      (frechet ? !(c > 1.0) : !(c > 0.0 && c < 1.0)))
    throw InvalidCofactorError(
        frechet ? "cofactor: Frechet branch needs c > 1; F(x)/F(cx) would "
                  "exceed 1 otherwise"
                : "cofactor: Weibull branch needs 0 < c < 1; F(x)/F(cx) "
                  "would exceed 1 otherwise");

  double a_of_c;
  if (psi.level().is_constant()) {
    a_of_c = frechet ? std::pow(c, psi.alpha()) : std::pow(c, -psi.alpha());
  } else {
    if (std::abs(c - psi.b()) > tol::scale_match)
      throw InvalidCofactorError(
          "cofactor: a periodic-level law factorizes only at its own scale b");
    a_of_c = psi.a();
  }

  CofactorResult result{CofactorDF(psi, c, a_of_c - 1.0), a_of_c, {}};
  const std::vector<double> grid =
      support_grid(psi.branch(), grids::cdf_monotone);
  result.report = monotone_df_check(
      [&result](double x) { return result.df.cdf(x); }, grid);
  if (!result.report.pass)
    throw InvalidCofactorError(
        "cofactor: F(x)/F(cx) fails the monotone d.f. validation grid");
  return result;
}

LaplaceTransformSpec LaplaceTransformSpec::exponential() {
  return LaplaceTransformSpec(Kind::exponential, 1.0);
}

LaplaceTransformSpec LaplaceTransformSpec::gamma(double beta) {
  if (!std::isfinite(beta) || !(beta > 0.0))
    throw DomainError("LaplaceTransformSpec: gamma beta must be positive");
  return LaplaceTransformSpec(Kind::gamma, beta);
}

double LaplaceTransformSpec::value(double s) const {
  if (!(s >= 0.0)) throw DomainError("phi: s must be >= 0");
  if (std::isinf(s)) return 0.0;
  return kind_ == Kind::exponential ? 1.0 / (1.0 + s)
                                    : std::pow(1.0 + s, -beta_);
}

double LaplaceTransformSpec::inverse(double u) const {
  if (!(u > 0.0 && u <= 1.0))
    throw DomainError("phi inverse: u must lie in (0, 1]");
  // (1+s)^{-beta} = u  <=>  s = e^{-ln(u)/beta} - 1; expm1 keeps precision
  // near u = 1.
  return std::expm1(-std::log(u) / beta_);
}

LtCofactor::LtCofactor(LaplaceTransformSpec phi, double c)
    : phi_(phi), c_(c) {
  if (!std::isfinite(c_) || !(c_ > 0.0 && c_ < 1.0))
    throw DomainError("LtCofactor: c must lie in (0,1)");
}

double LtCofactor::value(double s) const {
  if (!(s >= 0.0)) throw DomainError("phi0: s must be >= 0");
  if (std::isinf(s))
    return phi_.kind() == LaplaceTransformSpec::Kind::exponential
               ? c_
               : std::pow(c_, phi_.beta());
  const double ratio = (1.0 + c_ * s) / (1.0 + s);
  return phi_.kind() == LaplaceTransformSpec::Kind::exponential
             ? ratio
             : std::pow(ratio, phi_.beta());
}

LtCofactorResult lt_semi_sd_cofactor(const LaplaceTransformSpec& phi,
                                     double c) {
  LtCofactor phi0(phi, c);
  const std::vector<double> grid =
      geometric_grid(grids::cm_s_lo, grids::cm_s_hi, grids::cm_points);
  CmProxyReport cm =
      cm_proxy([&phi0](double s) { return phi0.value(s); }, grid, 8);
  return LtCofactorResult{phi0, std::move(cm)};
}

PhiMaxSemiStableDF::PhiMaxSemiStableDF(LaplaceTransformSpec phi,
                                       PsiFunction psi)
    : phi_(phi), psi_(std::move(psi)) {}

double PhiMaxSemiStableDF::cdf(double x) const {
  if (psi_.branch() == Branch::frechet) {
    if (x <= 0.0) return 0.0;
  } else if (x >= 0.0) {
    return 1.0;
  }
  return phi_.value(psi_.value(x));
}

double PhiMaxSemiStableDF::quantile(double u) const {
  if (!(u > 0.0 && u < 1.0))
    throw DomainError("quantile: u must lie in (0,1)");
  return detail::quantile_from_psi_target(psi_, phi_.inverse(u));
}

PhiMaxSemiStableDF compose_phi_max(LaplaceTransformSpec phi, PsiFunction psi) {
  return PhiMaxSemiStableDF(phi, std::move(psi));
}

PhiMaxSemiStableDF exp_max_semi_stable(PsiFunction psi) {
  return PhiMaxSemiStableDF(LaplaceTransformSpec::exponential(),
                            std::move(psi));
}

GridCheckReport max_semi_stability_check(const MaxSemiStableDF& f,
                                         std::size_t grid_size, double tol) {
  GridCheckReport report;
  const PsiFunction& psi = f.psi();
  for (const double x : identity_grid(psi, grid_size)) {
    const double lhs = f.cdf(x);
    const double rhs = std::pow(f.cdf(psi.b() * x), psi.a());
    report.max_abs_err = std::max(report.max_abs_err, std::abs(lhs - rhs));
  }
  report.pass = report.max_abs_err <= tol;
  return report;
}

GridCheckReport cofactor_closed_form_check(const MaxSemiStableDF& f,
                                           const CofactorDF& h,
                                           std::size_t grid_size, double tol) {
  GridCheckReport report;
  const PsiFunction& psi = f.psi();
  const double c = h.scale_c();
  for (const double x : identity_grid(psi, grid_size)) {
    const double hx = h.cdf(x);
    const double powered = std::pow(f.cdf(c * x), h.power_tau());
    report.max_abs_err = std::max(report.max_abs_err, std::abs(hx - powered));
    const double refactored = f.cdf(c * x) * hx;
    report.max_abs_err =
        std::max(report.max_abs_err, std::abs(f.cdf(x) - refactored));
  }
  report.pass = report.max_abs_err <= tol;
  return report;
}

GridCheckReport phi_composition_check(const PhiMaxSemiStableDF& g,
                                      std::size_t grid_size, double tol) {
  const PsiFunction& psi = g.psi();
  const double c = psi.branch() == Branch::frechet
                       ? std::pow(psi.b(), -psi.alpha())
                       : std::pow(psi.b(), psi.alpha());
  LtCofactor phi0(g.phi(), c);
  GridCheckReport report;
  for (const double x : identity_grid(psi, grid_size)) {
    const double lhs = g.cdf(x);
    const double rhs = g.cdf(psi.b() * x) * phi0.value(psi.value(x));
    report.max_abs_err = std::max(report.max_abs_err, std::abs(lhs - rhs));
  }
  report.pass = report.max_abs_err <= tol;
  return report;
}

GridCheckReport geometric_max_identity_check(const PhiMaxSemiStableDF& f,
                                             double p, double c,
                                             std::size_t grid_size,
                                             double tol) {
  if (f.phi().kind() != LaplaceTransformSpec::Kind::exponential)
    throw DomainError(
        "geometric_max_identity_check: law must carry the exponential "
        "transform");
  if (!(p > 0.0 && p < 1.0))
    throw DomainError("geometric_max_identity_check: p must lie in (0,1)");
  if (!(c > 0.0))
    throw DomainError("geometric_max_identity_check: c must be positive");
  GridCheckReport report;
  for (const double x : identity_grid(f.psi(), grid_size)) {
    const double fc = f.cdf(c * x);
    const double rhs = p * fc / (1.0 - (1.0 - p) * fc);
    report.max_abs_err =
        std::max(report.max_abs_err, std::abs(f.cdf(x) - rhs));
  }
  report.pass = report.max_abs_err <= tol;
  return report;
}

}  // namespace maxsemi
