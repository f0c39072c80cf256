#include "maxsemi/corefn.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace maxsemi {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool small_denominator_rational(double ratio) {
  if (!std::isfinite(ratio) || ratio <= 0.0) return false;
  for (int q = 1; q <= tol::rational_max_den; ++q) {
    const double p = std::round(ratio * q);
    if (p >= 1.0 && std::abs(ratio - p / q) <= tol::rational_eps) return true;
  }
  return false;
}

}  // namespace

PeriodicLevel::PeriodicLevel(double base, std::vector<Harmonic> harmonics,
                             double period)
    : base_(base), harmonics_(std::move(harmonics)), period_(period) {
  if (!std::isfinite(base_) || !(base_ > 0.0))
    throw DomainError("PeriodicLevel: base must be positive and finite");
  if (!std::isfinite(period_) || !(period_ > 0.0))
    throw DomainError("PeriodicLevel: period must be positive and finite");
  for (const Harmonic& h : harmonics_) {
    if (!std::isfinite(h.amplitude))
      throw DomainError("PeriodicLevel: harmonic amplitude must be finite");
    if (!(h.phase >= 0.0) || !(h.phase < kTwoPi))
      throw DomainError("PeriodicLevel: harmonic phase must lie in [0, 2*pi)");
  }

  grid_min_ = std::numeric_limits<double>::infinity();
  grid_max_ = -std::numeric_limits<double>::infinity();
  const std::size_t n = grids::validity_per_period;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = value(period_ * static_cast<double>(i) / n);
    grid_min_ = std::min(grid_min_, v);
    grid_max_ = std::max(grid_max_, v);
  }
  if (!(grid_min_ > 0.0))
    throw DomainError(
        "PeriodicLevel: h must stay positive; min over the validity grid is " +
        std::to_string(grid_min_));
}

double PeriodicLevel::value(double u) const {
  double s = 0.0;
  const double w = kTwoPi / period_;
  for (std::size_t k = 0; k < harmonics_.size(); ++k) {
    const Harmonic& h = harmonics_[k];
    s += h.amplitude * std::sin(w * static_cast<double>(k + 1) * u + h.phase);
  }
  return base_ * (1.0 + s);
}

double PeriodicLevel::slope(double u) const {
  double s = 0.0;
  const double w = kTwoPi / period_;
  for (std::size_t k = 0; k < harmonics_.size(); ++k) {
    const Harmonic& h = harmonics_[k];
    const double wk = w * static_cast<double>(k + 1);
    s += h.amplitude * wk * std::cos(wk * u + h.phase);
  }
  return base_ * s;
}

double alpha_from_ab(double a, double b, Branch branch) {
  if (!std::isfinite(a) || !(a > 1.0))
    throw DomainError("alpha_from_ab: a must be finite and > 1");
  if (branch == Branch::frechet) {
    if (!std::isfinite(b) || !(b > 1.0))
      throw DomainError("alpha_from_ab: Frechet branch needs b > 1");
    return std::log(a) / std::log(b);
  }
  if (!std::isfinite(b) || !(b > 0.0 && b < 1.0))
    throw DomainError("alpha_from_ab: Weibull branch needs 0 < b < 1");
  return std::log(a) / -std::log(b);
}

PsiFunction::PsiFunction(unchecked_tag, Branch branch, double alpha, double a,
                         double b, PeriodicLevel h)
    : branch_(branch), alpha_(alpha), a_(a), b_(b), h_(std::move(h)) {}

PsiFunction::PsiFunction(Branch branch, double alpha, double a, double b,
                         PeriodicLevel h)
    : PsiFunction(unchecked_tag{}, branch, alpha, a, b, std::move(h)) {
  if (!std::isfinite(alpha_) || !(alpha_ > 0.0))
    throw DomainError("PsiFunction: alpha must be positive and finite");
  if (!std::isfinite(a_) || !(a_ > 1.0))
    throw DomainError("PsiFunction: a must be finite and > 1");
  if (branch_ == Branch::frechet) {
    if (!std::isfinite(b_) || !(b_ > 1.0))
      throw DomainError("PsiFunction: Frechet branch needs b > 1");
  } else {
    if (!std::isfinite(b_) || !(b_ > 0.0 && b_ < 1.0))
      throw DomainError("PsiFunction: Weibull branch needs 0 < b < 1");
  }

  const double tie = branch_ == Branch::frechet ? a_ * std::pow(b_, -alpha_)
                                                : a_ * std::pow(b_, alpha_);
  if (std::abs(tie - 1.0) > tol::param_consistency)
    throw DomainError(branch_ == Branch::frechet
                          ? "PsiFunction: a*b^(-alpha) must equal 1"
                          : "PsiFunction: a*b^(alpha) must equal 1");

  if (std::abs(h_.period() - std::abs(std::log(b_))) > tol::param_consistency)
    throw DomainError("PsiFunction: h period must equal |ln(b)|");

  // Slope condition keeping exp(-psi) nondecreasing across the support.
  const std::size_t n = grids::validity_per_period;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = h_.period() * static_cast<double>(i) / n;
    const double hv = h_.value(u);
    const double hs = h_.slope(u);
    const bool ok = branch_ == Branch::frechet
                        ? hs <= alpha_ * hv + tol::slope_margin
                        : hs >= -alpha_ * hv - tol::slope_margin;
    if (!ok)
      throw DomainError(branch_ == Branch::frechet
                            ? "PsiFunction: slope condition h'(u) <= alpha*h(u) "
                              "violated on the validity grid"
                            : "PsiFunction: slope condition h'(u) >= -alpha*h(u) "
                              "violated on the validity grid");
  }
}

PsiFunction PsiFunction::from_ab(Branch branch, double a, double b,
                                 PeriodicLevel h) {
  return PsiFunction(branch, alpha_from_ab(a, b, branch), a, b, std::move(h));
}

PsiFunction PsiFunction::unchecked(Branch branch, double alpha, double a,
                                   double b, PeriodicLevel h) {
  return PsiFunction(unchecked_tag{}, branch, alpha, a, b, std::move(h));
}

bool PsiFunction::in_support(double x) const {
  return branch_ == Branch::frechet ? x > 0.0 : x < 0.0;
}

double PsiFunction::value(double x) const {
  if (branch_ == Branch::frechet) {
    if (!(x > 0.0))
      throw DomainError("psi: x must be > 0 on the Frechet branch");
    return std::pow(x, -alpha_) * h_.value(std::log(x));
  }
  if (!(x < 0.0))
    throw DomainError("psi: x must be < 0 on the Weibull branch");
  return std::pow(-x, alpha_) * h_.value(std::log(-x));
}

std::vector<double> identity_grid(const PsiFunction& psi, std::size_t n) {
  if (n < 2) throw DomainError("identity_grid: need at least 2 points");
  const double T = psi.level().period();
  std::vector<double> grid;
  grid.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = -1.5 * T + 3.0 * T * static_cast<double>(i) / (n - 1);
    grid.push_back(psi.branch() == Branch::frechet ? std::exp(t)
                                                   : -std::exp(t));
  }
  return grid;
}

ScalingIdentityReport check_scaling_identity(const PsiFunction& psi,
                                             std::size_t grid_size,
                                             double tol) {
  ScalingIdentityReport report;
  for (const double x : identity_grid(psi, grid_size)) {
    const double lhs = psi.value(x);
    const double rhs = psi.a() * psi.value(psi.b() * x);
    report.max_rel_err =
        std::max(report.max_rel_err, std::abs(lhs - rhs) / lhs);
  }
  report.pass = report.max_rel_err <= tol;
  return report;
}

ConstancyReport constancy_diagnostic(const PeriodicLevel& h, double t1,
                                     double t2, double tol) {
  if (!(t1 > 0.0) || !(t2 > 0.0))
    throw DomainError("constancy_diagnostic: candidate periods must be > 0");

  ConstancyReport report;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  const std::size_t n = grids::validity_per_period;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = h.period() * static_cast<double>(i) / n;
    const double v = h.value(u);
    report.t1_violation =
        std::max(report.t1_violation, std::abs(h.value(u + t1) - v));
    report.t2_violation =
        std::max(report.t2_violation, std::abs(h.value(u + t2) - v));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  report.both_periodic =
      report.t1_violation <= tol && report.t2_violation <= tol;
  report.ratio_irrational = !small_denominator_rational(t1 / t2);
  report.forces_constant = report.both_periodic && report.ratio_irrational;
  report.spread = hi - lo;
  report.is_constant = report.spread <= tol;
  return report;
}

}  // namespace maxsemi
