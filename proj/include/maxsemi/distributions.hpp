#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "maxsemi/corefn.hpp"
#include "maxsemi/rng.hpp"
#include "maxsemi/stats.hpp"

namespace maxsemi {

// Common surface of the distribution functions in this library: evaluation,
// inversion, and powered inversion (the quantile of F^tau, which is how
// fractional max-convolutions are sampled).
class UnivariateDF {
 public:
  virtual ~UnivariateDF() = default;

  virtual double cdf(double x) const = 0;

  // u in (0,1); DomainError outside.
  virtual double quantile(double u) const = 0;

  // Quantile of F^tau at u, tau > 0. The default routes through
  // quantile(u^{1/tau}) with saturation at the representable ends of (0,1);
  // subclasses override with exact log-space paths where available.
  virtual double quantile_power(double u, double tau) const;

  virtual Branch branch() const = 0;

  double sample_one(SplitMix64& rng) const { return quantile(rng.uniform01()); }
};

// n i.i.d. draws via inverse transform, deterministic in (seed).
std::vector<double> sample(const UnivariateDF& df, std::size_t n,
                           std::uint64_t seed);

// n i.i.d. draws from F^tau (law of the max of "tau copies" of F).
std::vector<double> sample_power(const UnivariateDF& df, double tau,
                                 std::size_t n, std::uint64_t seed);

// Lower end of the branch support: 0 for Frechet, -infinity for Weibull.
double support_bottom(Branch branch);

// Ascending support-spanning grid with |x| log-spaced in [abs_lo, abs_hi].
std::vector<double> support_grid(Branch branch, std::size_t n,
                                 double abs_lo = 1e-3, double abs_hi = 1e3);

namespace detail {

// pow(u, 1/tau) clamped into the open unit interval so downstream quantile
// calls never see 0 or 1.
double power_uniform(double u, double tau);

// Solves psi(x) = target for x in the branch support. Closed form for a
// constant level; otherwise bracketed bisection on t with x = e^t (Frechet)
// or x = -e^{-t} (Weibull), where psi is strictly decreasing and one
// b-scaling step shifts t by exactly one period.
double quantile_from_psi_target(const PsiFunction& psi, double target);

// Root-search path regardless of whether the level is constant; exposed so
// the closed form can be cross-checked against it.
double quantile_root_search(const PsiFunction& psi, double target);

}  // namespace detail

// Max-semi-stable distribution function F(x) = exp(-psi(x)) on the branch
// support (F = 0 left of a Frechet support, F = 1 right of a Weibull
// support). Satisfies F(x) = F(b x)^a.
class MaxSemiStableDF final : public UnivariateDF {
 public:
  explicit MaxSemiStableDF(PsiFunction psi);

  double cdf(double x) const override;
  double quantile(double u) const override;
  double quantile_power(double u, double tau) const override;
  Branch branch() const override { return psi_.branch(); }

  const PsiFunction& psi() const { return psi_; }

 private:
  PsiFunction psi_;
};

// Cofactor distribution H(x) = F(c x)^{tau} appearing in the max-semi-SD
// factorization F(x) = F(c x) * H(x) with tau = a(c) - 1; equivalently the
// law of V / c with V ~ F^tau. Quantiles reuse the base law's machinery.
class CofactorDF final : public UnivariateDF {
 public:
  CofactorDF(PsiFunction psi, double c, double tau);

  double cdf(double x) const override;
  double quantile(double u) const override;
  double quantile_power(double u, double tau) const override;
  Branch branch() const override { return base_.branch(); }

  double scale_c() const { return c_; }
  double power_tau() const { return tau_; }
  const MaxSemiStableDF& base() const { return base_; }

 private:
  MaxSemiStableDF base_;
  double c_;
  double tau_;
};

struct CofactorResult {
  CofactorDF df;
  double a_of_c = 0.0;  // exponent with H = F(c*)^{a(c)-1}
  MonotoneDFReport report;
};

// Cofactor of the factorization F(x) = F(c x) H(x). For a constant level the
// law is max-SD and any c on the correct side of 1 works, with
// a(c) = c^{alpha} (Frechet) or c^{-alpha} (Weibull). A periodic level
// admits only c equal to the law's own b. InvalidCofactorError when c sits
// on the wrong side of 1, when a periodic-level law is asked for a foreign
// c, or when the grid validation of H fails.
CofactorResult semi_sd_cofactor_df(const MaxSemiStableDF& f, double c);

// Laplace transform phi of a nonnegative law, evaluated on s >= 0.
// Exponential means phi(s) = 1/(1+s); Gamma(beta) means (1+s)^{-beta}.
class LaplaceTransformSpec {
 public:
  enum class Kind { exponential, gamma };

  static LaplaceTransformSpec exponential();
  static LaplaceTransformSpec gamma(double beta);

  double value(double s) const;    // DomainError for s < 0
  double inverse(double u) const;  // s with value(s) = u, u in (0, 1]

  Kind kind() const { return kind_; }
  double beta() const { return beta_; }

 private:
  LaplaceTransformSpec(Kind kind, double beta) : kind_(kind), beta_(beta) {}
  Kind kind_;
  double beta_;
};

// Ratio phi_0(s) = phi(s)/phi(c s) for 0 < c < 1: the transform of the
// cofactor in the semi-SD factorization phi(s) = phi(c s) phi_0(s).
class LtCofactor {
 public:
  LtCofactor(LaplaceTransformSpec phi, double c);

  double value(double s) const;
  double operator()(double s) const { return value(s); }

  double c() const { return c_; }
  const LaplaceTransformSpec& phi() const { return phi_; }

 private:
  LaplaceTransformSpec phi_;
  double c_;
};

struct LtCofactorResult {
  LtCofactor phi0;
  CmProxyReport cm;  // proxy evidence that phi0 is completely monotone
};

// Builds phi_0 and runs the CM proxy on the default geometric grid,
// orders 0..8. DomainError unless 0 < c < 1.
LtCofactorResult lt_semi_sd_cofactor(const LaplaceTransformSpec& phi, double c);

// Distribution function G(x) = phi(psi(x)): the phi-composed max-semi-stable
// law. Quantiles invert phi in closed form and then solve for psi.
class PhiMaxSemiStableDF final : public UnivariateDF {
 public:
  PhiMaxSemiStableDF(LaplaceTransformSpec phi, PsiFunction psi);

  double cdf(double x) const override;
  double quantile(double u) const override;
  Branch branch() const override { return psi_.branch(); }

  const LaplaceTransformSpec& phi() const { return phi_; }
  const PsiFunction& psi() const { return psi_; }

 private:
  LaplaceTransformSpec phi_;
  PsiFunction psi_;
};

PhiMaxSemiStableDF compose_phi_max(LaplaceTransformSpec phi, PsiFunction psi);

// The exponential special case F(x) = 1/(1 + psi(x)).
PhiMaxSemiStableDF exp_max_semi_stable(PsiFunction psi);

struct GridCheckReport {
  double max_abs_err = 0.0;
  bool pass = false;
};

// |F(x) - F(b x)^a| over the three-period identity grid.
GridCheckReport max_semi_stability_check(const MaxSemiStableDF& f,
                                         std::size_t grid_size,
                                         double tol = tol::identity_abs);

// |H(x) - F(c x)^{a(c)-1}| and |F(x) - F(c x) H(x)| over the identity grid,
// at the cofactor's own scale c and power a(c)-1.
GridCheckReport cofactor_closed_form_check(const MaxSemiStableDF& f,
                                           const CofactorDF& h,
                                           std::size_t grid_size,
                                           double tol = tol::identity_abs);

// |G(x) - G(b x) phi_0(psi(x))| with phi_0 built at c = b^{-alpha}
// (Frechet) or b^{alpha} (Weibull); both equal 1/a.
GridCheckReport phi_composition_check(const PhiMaxSemiStableDF& g,
                                      std::size_t grid_size,
                                      double tol = tol::identity_abs);

// |F(x) - p F(c x) / (1 - (1-p) F(c x))| over the identity grid; the
// geometric-max fixed-point identity of the exponential family. DomainError
// unless the law carries an exponential transform.
GridCheckReport geometric_max_identity_check(const PhiMaxSemiStableDF& f,
                                             double p, double c,
                                             std::size_t grid_size,
                                             double tol = tol::identity_abs);

}  // namespace maxsemi
