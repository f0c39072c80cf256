#pragma once

#include <cstddef>
#include <vector>

#include "maxsemi/errors.hpp"
#include "maxsemi/tolerances.hpp"

namespace maxsemi {

enum class Branch { frechet, weibull };

// One sinusoidal term of a PeriodicLevel. The k-th entry of a harmonic list
// (1-based) oscillates at k times the fundamental frequency 2*pi/period, so
// the overall function keeps the stated period.
struct Harmonic {
  double amplitude = 0.0;
  double phase = 0.0;  // in [0, 2*pi)
};

// Positive bounded periodic level function
//
//   h(u) = base * (1 + sum_k amp_k * sin(2*pi*k*u/period + phase_k)).
//
// An empty harmonic list gives the constant level h = base. Positivity is
// verified on a dense grid (validity_per_period points) at construction;
// violations raise DomainError.
class PeriodicLevel {
 public:
  PeriodicLevel(double base, std::vector<Harmonic> harmonics, double period);

  double value(double u) const;
  double slope(double u) const;  // dh/du

  double base() const { return base_; }
  double period() const { return period_; }
  const std::vector<Harmonic>& harmonics() const { return harmonics_; }
  bool is_constant() const { return harmonics_.empty(); }

  // Extremes of h over one period, taken from the construction-time grid.
  double grid_min() const { return grid_min_; }
  double grid_max() const { return grid_max_; }

 private:
  double base_;
  std::vector<Harmonic> harmonics_;
  double period_;
  double grid_min_ = 0.0;
  double grid_max_ = 0.0;
};

// Exponent alpha determined by the pair (a, b): a*b^{-alpha} = 1 on the
// Frechet branch (b > 1), a*b^{alpha} = 1 on the Weibull branch (0 < b < 1);
// a > 1 in both cases.
double alpha_from_ab(double a, double b, Branch branch);

// Exponent function of a max-semi-stable distribution function exp(-psi):
//
//   Frechet branch (support x > 0, b > 1):   psi(x) = x^{-alpha} h(ln x)
//   Weibull branch (support x < 0, 0 < b < 1): psi(x) = |x|^{alpha} h(ln|x|)
//
// with h periodic of period |ln b|. Construction validates the parameter
// ties above plus the slope condition that keeps exp(-psi) nondecreasing:
// h'(u) <= alpha*h(u) on the Frechet branch, h'(u) >= -alpha*h(u) on the
// Weibull branch, checked on the dense per-period grid.
class PsiFunction {
 public:
  PsiFunction(Branch branch, double alpha, double a, double b, PeriodicLevel h);

  // Convenience: derive alpha from (a, b).
  static PsiFunction from_ab(Branch branch, double a, double b, PeriodicLevel h);

  // Construction escape hatch that skips all validation. Exists so that
  // diagnostics (and tests) can build deliberately broken exponents, e.g. a
  // level whose period does not match |ln b|.
  static PsiFunction unchecked(Branch branch, double alpha, double a, double b,
                               PeriodicLevel h);

  // psi(x); DomainError off the branch support.
  double value(double x) const;

  bool in_support(double x) const;

  Branch branch() const { return branch_; }
  double alpha() const { return alpha_; }
  double a() const { return a_; }
  double b() const { return b_; }
  const PeriodicLevel& level() const { return h_; }

 private:
  struct unchecked_tag {};
  PsiFunction(unchecked_tag, Branch branch, double alpha, double a, double b,
              PeriodicLevel h);

  Branch branch_;
  double alpha_;
  double a_;
  double b_;
  PeriodicLevel h_;
};

// Log-spaced grid of support points spanning three periods of psi, centered
// at |x| = 1; the natural evaluation grid for the identities below.
std::vector<double> identity_grid(const PsiFunction& psi, std::size_t n);

struct ScalingIdentityReport {
  double max_rel_err = 0.0;
  bool pass = false;
};

// Checks psi(x) = a*psi(b*x) on identity_grid(psi, grid_size); passes when
// the worst relative error stays within tol.
ScalingIdentityReport check_scaling_identity(const PsiFunction& psi,
                                             std::size_t grid_size,
                                             double tol = tol::identity_rel);

struct ConstancyReport {
  double t1_violation = 0.0;   // max |h(u+t1) - h(u)| over the grid
  double t2_violation = 0.0;   // max |h(u+t2) - h(u)|
  bool both_periodic = false;  // both violations within tol
  bool ratio_irrational = false;  // t1/t2 admits no small-denominator rational
  bool forces_constant = false;   // both_periodic && ratio_irrational
  double spread = 0.0;            // max h - min h over the grid
  bool is_constant = false;       // spread <= tol
};

// Diagnostic for the dual-period constancy criterion: a function periodic
// under two periods with irrational ratio must be constant. Reports the
// periodicity violations under t1 and t2, whether the ratio looks
// irrational (no p/q with q <= rational_max_den within rational_eps), and
// the observed spread of h.
ConstancyReport constancy_diagnostic(const PeriodicLevel& h, double t1,
                                     double t2, double tol = tol::identity_rel);

}  // namespace maxsemi
