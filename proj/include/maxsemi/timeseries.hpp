#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "maxsemi/distributions.hpp"

namespace maxsemi {

enum class Ar1Init { from_marginal, fixed };

struct Ar1Options {
  std::size_t length = 200;   // number of recursion steps
  std::size_t burn_in = 200;  // convergence horizon quoted for fixed starts
  Ar1Init init = Ar1Init::from_marginal;
  double init_value = 0.0;    // used when init == fixed
};

// Cross-replicate matrix of series values; column n holds X_n over all
// replicates (column 0 is the initial state).
class SeriesMatrix {
 public:
  SeriesMatrix(std::size_t replicates, std::size_t length);

  double& at(std::size_t replicate, std::size_t step);
  double at(std::size_t replicate, std::size_t step) const;

  std::size_t replicates() const { return replicates_; }
  std::size_t steps() const { return steps_; }  // length + 1
  std::vector<double> slice(std::size_t step) const;

 private:
  std::size_t replicates_;
  std::size_t steps_;
  std::vector<double> data_;
};

// Max-autoregressive recursion X_n = rho*X_{n-1} v eps_n with innovations
// drawn from the cofactor H of the factorization F(x) = F(x/rho) H(x); a
// marginal start makes every X_n ~ F exactly. Propagates
// InvalidCofactorError when the marginal does not factorize at c = 1/rho.
// rho < 1 pairs with the Frechet branch, rho > 1 (explosive) with Weibull.
SeriesMatrix simulate_max_ar1(const MaxSemiStableDF& marginal, double rho,
                              const Ar1Options& options,
                              std::size_t replicates, std::uint64_t seed,
                              int workers = 1);

// Modified recursion: with probability p keep rho*X_{n-1}, otherwise
// rho*X_{n-1} v eps_n with eps drawn from the marginal itself. Stationary
// exactly when the marginal is the exponential-transform law with a = 1/p
// and b = 1/rho; construction enforces these ties. The Bernoulli selection
// consumes one uniform per step from the replicate's substream.
SeriesMatrix simulate_modified_max_ar1(const PhiMaxSemiStableDF& marginal,
                                       double p, double rho,
                                       const Ar1Options& options,
                                       std::size_t replicates,
                                       std::uint64_t seed, int workers = 1);

// Draws max(X_1..X_N)/c with N ~ Geometric(p) on {1,2,...} and X_i i.i.d.
// from f; for the exponential-transform law with a = 1/p, b = c this
// reproduces f itself. p = 1 degenerates to X/c (no geometric uniform is
// consumed).
std::vector<double> geometric_max_sampler(const PhiMaxSemiStableDF& f,
                                          double p, double c, std::size_t n,
                                          std::uint64_t seed);

struct CheckpointKS {
  std::size_t checkpoint = 0;
  KSReport ks;
};

// One-sample KS of the cross-replicate slice at each checkpoint against the
// claimed marginal. Requires >= 100 replicates and checkpoints within the
// series.
std::vector<CheckpointKS> stationarity_report(
    const SeriesMatrix& series, const UnivariateDF& marginal,
    std::span<const std::size_t> checkpoints);

// |F(x) - F(x/rho) H(x)| over the identity grid: the distributional fixed
// point behind stationarity of the max-autoregression.
GridCheckReport ar1_factorization_check(const MaxSemiStableDF& marginal,
                                        double rho, std::size_t grid_size,
                                        double tol = tol::identity_abs);

}  // namespace maxsemi
