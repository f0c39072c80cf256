#include "maxsemi/processes.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "maxsemi/parallel.hpp"

namespace maxsemi {

namespace {

void validate_times(std::span<const double> times, bool positive_start,
                    const char* who) {
  if (times.empty())
    throw DomainError(std::string(who) + ": times must be nonempty");
  if (positive_start ? !(times[0] > 0.0) : !(times[0] >= 0.0))
    throw DomainError(std::string(who) +
                      (positive_start ? ": times must start after 0"
                                      : ": times must start at or after 0"));
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw DomainError(std::string(who) +
                        ": times must be strictly increasing");
}

double gamma_draw(SplitMix64& rng, double shape) {
  std::gamma_distribution<double> gd(shape, 1.0);
  return gd(rng);
}

}  // namespace

ExtremalPath time_changed_ep(const UnivariateDF& f,
                             const SubordinatorPath& clock, SplitMix64& rng) {
  if (clock.times.size() != clock.values.size())
    throw DomainError("time_changed_ep: malformed clock path");
  ExtremalPath path;
  path.times = clock.times;
  path.values.reserve(clock.times.size());
  double x = support_bottom(f.branch());
  double prev = 0.0;
  for (const double total : clock.values) {
    const double dt = total - prev;
    if (dt < 0.0)
      throw DomainError("time_changed_ep: clock must be nondecreasing");
    if (dt > 0.0) x = std::max(x, f.quantile_power(rng.uniform01(), dt));
    path.values.push_back(x);
    prev = total;
  }
  return path;
}

ExtremalPath simulate_ep_path(const UnivariateDF& f,
                              std::span<const double> times, SplitMix64& rng) {
  validate_times(times, /*positive_start=*/true, "simulate_ep_path");
  SubordinatorPath ident;
  ident.times.assign(times.begin(), times.end());
  ident.values = ident.times;
  return time_changed_ep(f, ident, rng);
}

std::vector<ExtremalPath> simulate_ep_paths(const UnivariateDF& f,
                                            std::span<const double> times,
                                            std::size_t replicates,
                                            std::uint64_t seed, int workers) {
  validate_times(times, true, "simulate_ep_paths");
  if (replicates == 0)
    throw DomainError("simulate_ep_paths: replicates must be >= 1");
  std::vector<ExtremalPath> paths(replicates);
  parallel_replicates(replicates, workers, [&](std::size_t r) {
    SplitMix64 rng = substream(seed, r);
    paths[r] = simulate_ep_path(f, times, rng);
  });
  return paths;
}

SubordinatorPath simulate_gamma_subordinator(double beta,
                                             std::span<const double> times,
                                             SplitMix64& rng) {
  if (!(beta > 0.0))
    throw DomainError("gamma subordinator: beta must be positive");
  validate_times(times, /*positive_start=*/false, "simulate_gamma_subordinator");
  SubordinatorPath path;
  path.times.assign(times.begin(), times.end());
  path.values.reserve(times.size());
  double prev_t = 0.0;
  double total = 0.0;
  for (const double t : times) {
    const double dt = t - prev_t;
    if (dt > 0.0) total += gamma_draw(rng, beta * dt);
    path.values.push_back(total);
    prev_t = t;
  }
  return path;
}

std::vector<SubordinatorPath> simulate_gamma_subordinators(
    double beta, std::span<const double> times, std::size_t replicates,
    std::uint64_t seed, int workers) {
  if (replicates == 0)
    throw DomainError("simulate_gamma_subordinators: replicates must be >= 1");
  std::vector<SubordinatorPath> paths(replicates);
  parallel_replicates(replicates, workers, [&](std::size_t r) {
    SplitMix64 rng = substream(seed, r);
    paths[r] = simulate_gamma_subordinator(beta, times, rng);
  });
  return paths;
}

ExtremalPath simulate_compound_ep(const UnivariateDF& f, double beta,
                                  std::span<const double> times,
                                  SplitMix64& rng) {
  validate_times(times, /*positive_start=*/true, "simulate_compound_ep");
  const SubordinatorPath clock = simulate_gamma_subordinator(beta, times, rng);
  return time_changed_ep(f, clock, rng);
}

std::vector<ExtremalPath> simulate_compound_eps(const UnivariateDF& f,
                                                double beta,
                                                std::span<const double> times,
                                                std::size_t replicates,
                                                std::uint64_t seed,
                                                int workers) {
  validate_times(times, true, "simulate_compound_eps");
  if (replicates == 0)
    throw DomainError("simulate_compound_eps: replicates must be >= 1");
  std::vector<ExtremalPath> paths(replicates);
  parallel_replicates(replicates, workers, [&](std::size_t r) {
    SplitMix64 rng = substream(seed, r);
    paths[r] = simulate_compound_ep(f, beta, times, rng);
  });
  return paths;
}

double compound_cdf_analytic(const LaplaceTransformSpec& phi,
                             const UnivariateDF& f, double t, double x) {
  if (!(t > 0.0))
    throw DomainError("compound_cdf_analytic: t must be positive");
  const double base = f.cdf(x);
  if (base <= 0.0) return 0.0;
  if (base >= 1.0) return 1.0;
  return std::pow(phi.value(-std::log(base)), t);
}

SelfSimilarityReport self_similarity_check(const MaxSemiStableDF& f, double b,
                                           double t, std::size_t n,
                                           std::uint64_t seed) {
  if (!(b > 0.0)) throw DomainError("self_similarity_check: b must be > 0");
  if (!(t > 0.0)) throw DomainError("self_similarity_check: t must be > 0");
  if (n < 2) throw DomainError("self_similarity_check: need n >= 2 draws");

  SelfSimilarityReport report;
  report.exponent = 1.0 / f.psi().alpha();
  report.time_factor = b;

  SplitMix64 rng_a = substream(seed, 0);
  SplitMix64 rng_b = substream(seed, 1);
  std::vector<double> lhs, rhs;
  lhs.reserve(n);
  rhs.reserve(n);
  const double scale = std::pow(b, report.exponent);
  for (std::size_t i = 0; i < n; ++i)
    lhs.push_back(f.quantile_power(rng_a.uniform01(), b * t));
  for (std::size_t i = 0; i < n; ++i)
    rhs.push_back(scale * f.quantile_power(rng_b.uniform01(), t));

  report.ks = ks_two_sample(std::move(lhs), std::move(rhs));
  report.pass = report.ks.pass;
  return report;
}

SelfSimilarityReport self_similarity_check(double alpha, double b, double t,
                                           std::size_t n, std::uint64_t seed) {
  if (!(alpha > 0.0))
    throw DomainError("self_similarity_check: alpha must be positive");
  MaxSemiStableDF f(PsiFunction::from_ab(
      Branch::frechet, std::pow(2.0, alpha), 2.0,
      PeriodicLevel(1.0, {}, std::log(2.0))));
  return self_similarity_check(f, b, t, n, seed);
}

}  // namespace maxsemi
