#include "maxsemi/timeseries.hpp"

#include <algorithm>
#include <cmath>

#include "maxsemi/parallel.hpp"

namespace maxsemi {

SeriesMatrix::SeriesMatrix(std::size_t replicates, std::size_t length)
    : replicates_(replicates), steps_(length + 1) {
  if (replicates == 0 || length == 0)
    throw DomainError("SeriesMatrix: need replicates >= 1 and length >= 1");
  data_.assign(replicates_ * steps_, 0.0);
}

double& SeriesMatrix::at(std::size_t replicate, std::size_t step) {
  return data_[replicate * steps_ + step];
}

double SeriesMatrix::at(std::size_t replicate, std::size_t step) const {
  return data_[replicate * steps_ + step];
}

std::vector<double> SeriesMatrix::slice(std::size_t step) const {
  if (step >= steps_)
    throw DomainError("SeriesMatrix: slice index beyond series length");
  std::vector<double> out;
  out.reserve(replicates_);
  for (std::size_t r = 0; r < replicates_; ++r) out.push_back(at(r, step));
  return out;
}

namespace {

double initial_state(const UnivariateDF& marginal, const Ar1Options& options,
                     SplitMix64& rng) {
  if (options.init == Ar1Init::from_marginal)
    return marginal.quantile(rng.uniform01());
  const bool frechet = marginal.branch() == Branch::frechet;
  if (frechet ? !(options.init_value > 0.0) : !(options.init_value < 0.0))
    throw DomainError(
        "max-AR(1): fixed initial value must lie in the branch support");
  return options.init_value;
}

}  // namespace

SeriesMatrix simulate_max_ar1(const MaxSemiStableDF& marginal, double rho,
                              const Ar1Options& options,
                              std::size_t replicates, std::uint64_t seed,
                              int workers) {
  if (!std::isfinite(rho) || !(rho > 0.0))
    throw DomainError("max-AR(1): rho must be positive and finite");
  const CofactorResult cofactor = semi_sd_cofactor_df(marginal, 1.0 / rho);
  const CofactorDF& innovation = cofactor.df;

  SeriesMatrix series(replicates, options.length);
  parallel_replicates(replicates, workers, [&](std::size_t r) {
    SplitMix64 rng = substream(seed, r);
    double x = initial_state(marginal, options, rng);
    series.at(r, 0) = x;
    for (std::size_t n = 1; n <= options.length; ++n) {
      const double eps = innovation.quantile(rng.uniform01());
      x = std::max(rho * x, eps);
      series.at(r, n) = x;
    }
  });
  return series;
}

SeriesMatrix simulate_modified_max_ar1(const PhiMaxSemiStableDF& marginal,
                                       double p, double rho,
                                       const Ar1Options& options,
                                       std::size_t replicates,
                                       std::uint64_t seed, int workers) {
  if (!(p > 0.0 && p < 1.0))
    throw DomainError("modified max-AR(1): p must lie in (0,1)");
  if (!std::isfinite(rho) || !(rho > 0.0))
    throw DomainError("modified max-AR(1): rho must be positive and finite");
  if (marginal.phi().kind() != LaplaceTransformSpec::Kind::exponential)
    throw DomainError(
        "modified max-AR(1): marginal must carry the exponential transform");
  if (std::abs(marginal.psi().a() - 1.0 / p) > tol::scale_match)
    throw DomainError("modified max-AR(1): marginal exponent needs a = 1/p");
  if (std::abs(marginal.psi().b() - 1.0 / rho) > tol::scale_match)
    throw DomainError("modified max-AR(1): marginal scale needs b = 1/rho");

  SeriesMatrix series(replicates, options.length);
  parallel_replicates(replicates, workers, [&](std::size_t r) {
    SplitMix64 rng = substream(seed, r);
    double x = initial_state(marginal, options, rng);
    series.at(r, 0) = x;
    for (std::size_t n = 1; n <= options.length; ++n) {
      const bool keep = rng.uniform01() < p;
      if (keep) {
        x = rho * x;
      } else {
        const double eps = marginal.quantile(rng.uniform01());
        x = std::max(rho * x, eps);
      }
      series.at(r, n) = x;
    }
  });
  return series;
}

std::vector<double> geometric_max_sampler(const PhiMaxSemiStableDF& f,
                                          double p, double c, std::size_t n,
                                          std::uint64_t seed) {
  if (!(p > 0.0 && p <= 1.0))
    throw DomainError("geometric_max_sampler: p must lie in (0,1]");
  if (!(c > 0.0))
    throw DomainError("geometric_max_sampler: c must be positive");
  if (n == 0) throw DomainError("geometric_max_sampler: n must be >= 1");
  if (f.phi().kind() != LaplaceTransformSpec::Kind::exponential)
    throw DomainError(
        "geometric_max_sampler: law must carry the exponential transform");
  if (p < 1.0) {
    if (std::abs(f.psi().a() - 1.0 / p) > tol::scale_match ||
        std::abs(f.psi().b() - c) > tol::scale_match)
      throw DomainError(
          "geometric_max_sampler: law must have a = 1/p and b = c");
  }

  SplitMix64 rng = substream(seed, 0);
  std::vector<double> out;
  out.reserve(n);
  const double log_q = p < 1.0 ? std::log1p(-p) : 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double count = 1.0;
    if (p < 1.0)
      count = 1.0 + std::floor(std::log(rng.uniform01()) / log_q);
    out.push_back(f.quantile_power(rng.uniform01(), count) / c);
  }
  return out;
}

std::vector<CheckpointKS> stationarity_report(
    const SeriesMatrix& series, const UnivariateDF& marginal,
    std::span<const std::size_t> checkpoints) {
  if (series.replicates() < 100)
    throw DomainError("stationarity_report: need at least 100 replicates");
  std::vector<CheckpointKS> out;
  out.reserve(checkpoints.size());
  for (const std::size_t cp : checkpoints) {
    if (cp >= series.steps())
      throw DomainError("stationarity_report: checkpoint beyond series length");
    CheckpointKS entry;
    entry.checkpoint = cp;
    entry.ks = ks_one_sample(series.slice(cp),
                             [&marginal](double x) { return marginal.cdf(x); });
    out.push_back(entry);
  }
  return out;
}

GridCheckReport ar1_factorization_check(const MaxSemiStableDF& marginal,
                                        double rho, std::size_t grid_size,
                                        double tol) {
  if (!(rho > 0.0))
    throw DomainError("ar1_factorization_check: rho must be positive");
  const CofactorResult cofactor = semi_sd_cofactor_df(marginal, 1.0 / rho);
  GridCheckReport report;
  for (const double x : identity_grid(marginal.psi(), grid_size)) {
    const double lhs = marginal.cdf(x);
    const double rhs = marginal.cdf(x / rho) * cofactor.df.cdf(x);
    report.max_abs_err = std::max(report.max_abs_err, std::abs(lhs - rhs));
  }
  report.pass = report.max_abs_err <= tol;
  return report;
}

}  // namespace maxsemi
