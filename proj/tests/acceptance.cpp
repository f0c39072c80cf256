// Acceptance gate: twelve end-to-end criteria covering exponent-function
// scaling, max-semi-stability, cofactor factorizations, transform
// compositions, process marginals, autoregressive stationarity, quantile
// correctness and command-line determinism. Each criterion prints one
// PASS/FAIL line; the binary exits nonzero if any criterion fails.
//
// Usage: acceptance_tests <path-to-cli-binary>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "maxsemi/catalog.hpp"
#include "maxsemi/distributions.hpp"
#include "maxsemi/errors.hpp"
#include "maxsemi/processes.hpp"
#include "maxsemi/serialize.hpp"
#include "maxsemi/timeseries.hpp"

namespace {

using namespace maxsemi;
namespace fs = std::filesystem;

constexpr double kIdentityTol = 1e-12;
constexpr double kQuantileTol = 1e-10;
constexpr std::size_t kDraws = 10000;  // KS threshold 1.36/sqrt(n) = 0.0136
constexpr int kWorkers = 4;

int g_criterion = 0;
int g_failures = 0;

void report(bool pass, const std::string& label, const std::string& detail) {
  ++g_criterion;
  std::printf("[%2d/12] %s %s%s%s\n", g_criterion, pass ? "PASS" : "FAIL",
              label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

std::vector<double> slice_at(const std::vector<ExtremalPath>& paths,
                             std::size_t index) {
  std::vector<double> values;
  values.reserve(paths.size());
  for (const ExtremalPath& path : paths) values.push_back(path.values[index]);
  return values;
}

// 1. psi(x) = a psi(b x) over three periods for all six bundled exponents.
void criterion_scaling_identity() {
  double worst = 0.0;
  for (const NamedPsi& named : shipped_psis()) {
    const ScalingIdentityReport r =
        check_scaling_identity(named.psi, grids::identity_default);
    worst = std::max(worst, r.max_rel_err);
  }
  report(worst <= kIdentityTol, "exponent scaling identity on all 6 laws",
         "max rel err " + fmt(worst));
}

// 2. F(x) = F(b x)^a for all six laws.
void criterion_semi_stability() {
  double worst = 0.0;
  for (const NamedPsi& named : shipped_psis()) {
    const GridCheckReport r = max_semi_stability_check(
        MaxSemiStableDF(named.psi), grids::identity_default);
    worst = std::max(worst, r.max_abs_err);
  }
  report(worst <= kIdentityTol, "max-semi-stability of the d.f.s",
         "max abs err " + fmt(worst));
}

// 3. The cofactor at the law's own scale equals F(b.)^{a-1}, is a valid
// d.f., and the wrong-side scale is rejected.
void criterion_cofactor_validity() {
  double worst = 0.0;
  bool ok = true;
  for (const NamedPsi& named : shipped_psis()) {
    const MaxSemiStableDF f(named.psi);
    const CofactorResult res = semi_sd_cofactor_df(f, named.psi.b());
    ok = ok && res.report.pass;
    const GridCheckReport closed =
        cofactor_closed_form_check(f, res.df, grids::identity_default);
    worst = std::max(worst, closed.max_abs_err);
    ok = ok && closed.pass;

    const bool frechet = named.psi.branch() == Branch::frechet;
    bool rejected = false;
    try {
      semi_sd_cofactor_df(f, frechet ? 0.5 : 2.0);
    } catch (const InvalidCofactorError&) {
      rejected = true;
    }
    ok = ok && rejected;
  }
  report(ok && worst <= kIdentityTol,
         "cofactor closed form, monotonicity, wrong-side rejection",
         "max abs err " + fmt(worst));
}

// 4. Constant-level Frechet factorizes at every scale: c in {1.3, 2, 5}
// with a(c) = c^alpha.
void criterion_scale_family() {
  const MaxSemiStableDF f(shipped_psi("frechet-constant"));
  const double alpha = f.psi().alpha();
  double worst_a = 0.0;
  double worst_identity = 0.0;
  bool ok = true;
  for (const double c : {1.3, 2.0, 5.0}) {
    const CofactorResult res = semi_sd_cofactor_df(f, c);
    ok = ok && res.report.pass;
    worst_a = std::max(worst_a, std::abs(res.a_of_c - std::pow(c, alpha)));
    const GridCheckReport closed =
        cofactor_closed_form_check(f, res.df, grids::identity_default);
    worst_identity = std::max(worst_identity, closed.max_abs_err);
    ok = ok && closed.pass;
  }
  report(ok && worst_a <= kIdentityTol && worst_identity <= kIdentityTol,
         "constant-level scale family with a(c) = c^alpha",
         "max a(c) err " + fmt(worst_a));
}

// 5. phi(psi(x)) = phi(psi(b x)) phi0(psi(x)) for Gamma beta in {1, 2} on
// both branches, with the complete-monotonicity proxy clean on phi0.
void criterion_phi_composition() {
  double worst = 0.0;
  bool cm_ok = true;
  for (const double beta : {1.0, 2.0}) {
    for (const NamedPsi& named : shipped_psis()) {
      const PhiMaxSemiStableDF g =
          compose_phi_max(LaplaceTransformSpec::gamma(beta), named.psi);
      const GridCheckReport comp =
          phi_composition_check(g, grids::identity_default);
      worst = std::max(worst, comp.max_abs_err);

      const PsiFunction& psi = named.psi;
      const double c = psi.branch() == Branch::frechet
                           ? std::pow(psi.b(), -psi.alpha())
                           : std::pow(psi.b(), psi.alpha());
      const LtCofactorResult lt = lt_semi_sd_cofactor(g.phi(), c);
      cm_ok = cm_ok && lt.cm.all_pass;
    }
  }
  report(worst <= kIdentityTol && cm_ok,
         "transform-composition identity + CM proxy orders 0-8",
         "max abs err " + fmt(worst));
}

// 6. Subordinated extremal process: 1e4 simulated values vs the closed-form
// marginal {phi(-ln F)}^t at t in {1, 2}.
void criterion_compound_marginals() {
  const MaxSemiStableDF f(shipped_psi("frechet-constant"));
  const LaplaceTransformSpec phi = LaplaceTransformSpec::gamma(1.0);
  const std::vector<double> times{1.0, 2.0};
  const std::vector<ExtremalPath> paths =
      simulate_compound_eps(f, 1.0, times, kDraws, 2, kWorkers);
  double worst = 0.0;
  bool ok = true;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const KSReport ks = ks_one_sample(slice_at(paths, i), [&](double x) {
      return compound_cdf_analytic(phi, f, t, x);
    });
    worst = std::max(worst, ks.statistic);
    ok = ok && ks.pass;
  }
  report(ok, "subordinated-process marginals, KS at t in {1,2}",
         "worst D " + fmt(worst) + " < 0.0136");
}

// 7. Extremal-process marginals F^t at t in {0.5, 1, 2}.
void criterion_ep_marginals() {
  const MaxSemiStableDF f(shipped_psi("frechet-constant"));
  const std::vector<double> times{0.5, 1.0, 2.0};
  const std::vector<ExtremalPath> paths =
      simulate_ep_paths(f, times, kDraws, 3, kWorkers);
  double worst = 0.0;
  bool ok = true;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const KSReport ks = ks_one_sample(slice_at(paths, i), [&](double x) {
      return std::pow(f.cdf(x), t);
    });
    worst = std::max(worst, ks.statistic);
    ok = ok && ks.pass;
  }
  report(ok, "extremal-process marginals, KS at t in {0.5,1,2}",
         "worst D " + fmt(worst) + " < 0.0136");
}

// 8. Self-similarity: the constant-level process scales at every factor;
// the periodic-level process scales only at its own b.
void criterion_self_similarity() {
  const std::uint64_t seed = 2;
  bool ok = true;
  double worst = 0.0;
  for (const double b : {2.0, std::exp(1.0)}) {
    const SelfSimilarityReport r = self_similarity_check(1.0, b, 1.0, kDraws, seed);
    ok = ok && r.pass;
    worst = std::max(worst, r.ks.statistic);
  }
  const MaxSemiStableDF periodic(shipped_psi("frechet-one-harmonic"));
  const SelfSimilarityReport own =
      self_similarity_check(periodic, 2.0, 1.0, kDraws, seed);
  ok = ok && own.pass;
  worst = std::max(worst, own.ks.statistic);
  const SelfSimilarityReport foreign =
      self_similarity_check(periodic, std::exp(1.0), 1.0, kDraws, seed);
  ok = ok && !foreign.pass;
  report(ok, "self-similarity passes own scales, fails foreign scale",
         "worst passing D " + fmt(worst) + ", foreign D " +
             fmt(foreign.ks.statistic));
}

// 9. Max-autoregressive stationarity at checkpoints {0,100,200} over 1e4
// replicates, plus the grid factorization identity; contractive Frechet
// rho = 0.5 and explosive Weibull rho = 2.
void criterion_ar1_stationarity() {
  bool ok = true;
  double worst_ks = 0.0;
  double worst_grid = 0.0;
  const std::vector<std::size_t> checkpoints{0, 100, 200};
  struct Case {
    const char* law;
    double rho;
  };
  for (const Case& c : {Case{"frechet-constant", 0.5},
                        Case{"weibull-constant", 2.0}}) {
    const MaxSemiStableDF f(shipped_psi(c.law));
    Ar1Options options;
    options.length = 200;
    const SeriesMatrix series =
        simulate_max_ar1(f, c.rho, options, kDraws, 4, kWorkers);
    for (const CheckpointKS& entry :
         stationarity_report(series, f, checkpoints)) {
      ok = ok && entry.ks.pass;
      worst_ks = std::max(worst_ks, entry.ks.statistic);
    }
    const GridCheckReport grid =
        ar1_factorization_check(f, c.rho, grids::identity_default);
    ok = ok && grid.pass;
    worst_grid = std::max(worst_grid, grid.max_abs_err);
  }
  report(ok && worst_grid <= kIdentityTol,
         "max-autoregression stationary at {0,100,200}, both branches",
         "worst D " + fmt(worst_ks) + ", grid err " + fmt(worst_grid));
}

// 10. Modified scheme at p = 0.5, c = 2 with marginal F(x) = x/(1+x):
// fixed-point grid identity, stationarity, and geometric-maximum sampling.
void criterion_modified_scheme() {
  const PhiMaxSemiStableDF f =
      exp_max_semi_stable(shipped_psi("frechet-constant"));
  const GridCheckReport identity =
      geometric_max_identity_check(f, 0.5, 2.0, grids::identity_default);

  Ar1Options options;
  options.length = 200;
  const SeriesMatrix series =
      simulate_modified_max_ar1(f, 0.5, 0.5, options, kDraws, 4, kWorkers);
  bool ok = identity.pass;
  double worst_ks = 0.0;
  for (const CheckpointKS& entry : stationarity_report(
           series, f, std::vector<std::size_t>{0, 100, 200})) {
    ok = ok && entry.ks.pass;
    worst_ks = std::max(worst_ks, entry.ks.statistic);
  }

  const std::vector<double> draws = geometric_max_sampler(f, 0.5, 2.0, kDraws, 4);
  const KSReport sampler_ks =
      ks_one_sample(draws, [&f](double x) { return f.cdf(x); });
  ok = ok && sampler_ks.pass;
  worst_ks = std::max(worst_ks, sampler_ks.statistic);
  report(ok && identity.max_abs_err <= kIdentityTol,
         "modified scheme: fixed point, stationarity, geometric maxima",
         "grid err " + fmt(identity.max_abs_err) + ", worst D " +
             fmt(worst_ks));
}

// 11. Quantiles: closed form vs root search on constant-level laws;
// quantile/cdf round trips on periodic-level laws.
void criterion_quantiles() {
  double worst_closed = 0.0;
  double worst_round = 0.0;
  for (const NamedPsi& named : shipped_psis()) {
    if (named.psi.level().is_constant()) {
      for (const double target : {20.0, 5.0, 1.0, 0.2, 0.01}) {
        const double closed =
            detail::quantile_from_psi_target(named.psi, target);
        const double rooted = detail::quantile_root_search(named.psi, target);
        worst_closed =
            std::max(worst_closed,
                     std::abs(closed - rooted) / std::max(1.0, std::abs(closed)));
      }
    } else {
      const MaxSemiStableDF f(named.psi);
      for (const double u : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
        worst_round =
            std::max(worst_round, std::abs(f.cdf(f.quantile(u)) - u));
      }
    }
  }
  report(worst_closed <= kQuantileTol && worst_round <= kQuantileTol,
         "quantile closed-form agreement and round trips",
         "closed " + fmt(worst_closed) + ", round trip " + fmt(worst_round));
}

// ---- criterion 12: command-line determinism --------------------------------

std::string g_cli_path;

int run_cli(const std::string& args) {
  const std::string cmd = g_cli_path + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

void write_text(const fs::path& file, const std::string& text) {
  std::ofstream out(file);
  out << text;
}

bool read_all_files(const fs::path& dir,
                    std::map<std::string, std::string>& files) {
  if (!fs::is_directory(dir)) return false;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) return false;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    files[entry.path().filename().string()] = buf.str();
  }
  return true;
}

struct Scenario {
  std::string name;
  std::string command;
  Json config;
};

std::vector<Scenario> cli_scenarios() {
  const Json plain =
      distribution_to_json(MaxSemiStableDF(shipped_psi("frechet-constant")));
  const Json periodic = distribution_to_json(
      MaxSemiStableDF(shipped_psi("weibull-one-harmonic")));
  const Json composed = distribution_to_json(compose_phi_max(
      LaplaceTransformSpec::gamma(2.0), shipped_psi("frechet-one-harmonic")));
  const Json rational = distribution_to_json(
      exp_max_semi_stable(shipped_psi("frechet-constant")));

  std::vector<Scenario> scenarios;
  {
    Json c;
    c["distribution"] = plain;
    scenarios.push_back({"verify-plain", "verify", c});
  }
  {
    Json c;
    c["distribution"] = periodic;
    scenarios.push_back({"verify-periodic", "verify", c});
  }
  {
    Json c;
    c["distribution"] = composed;
    scenarios.push_back({"verify-composed", "verify", c});
  }
  {
    Json c;
    c["distribution"] = plain;
    c["times"] = Json::array({0.5, 1.0, 2.0});
    c["replicates"] = 2000;
    c["seed"] = 11;
    scenarios.push_back({"sim-ep", "sim-ep", c});
  }
  {
    Json c;
    c["distribution"] = plain;
    c["beta"] = 1.0;
    c["times"] = Json::array({1.0, 2.0});
    c["replicates"] = 2000;
    c["seed"] = 11;
    c["curve_points"] = 101;
    scenarios.push_back({"sim-compound-ep", "sim-compound-ep", c});
  }
  {
    Json c;
    c["distribution"] = plain;
    c["rho"] = 0.5;
    c["length"] = 60;
    c["replicates"] = 500;
    c["seed"] = 4;
    c["checkpoints"] = Json::array({0, 30, 60});
    scenarios.push_back({"sim-ar1", "sim-ar1", c});
  }
  {
    Json c;
    c["distribution"] = rational;
    c["p"] = 0.5;
    c["rho"] = 0.5;
    c["length"] = 60;
    c["replicates"] = 500;
    c["geom_n"] = 2000;
    c["seed"] = 1;
    scenarios.push_back({"sim-ar1-mod", "sim-ar1-mod", c});
  }
  return scenarios;
}

// 12. Every verify/sim-* scenario run twice with the same seed produces
// byte-identical artifacts; simulation output is also invariant to the
// worker count.
void criterion_determinism() {
  const fs::path root =
      fs::temp_directory_path() /
      ("maxsemi-acceptance-" + std::to_string(static_cast<unsigned>(::getpid())));
  std::error_code ec;
  fs::remove_all(root, ec);
  fs::create_directories(root);

  bool ok = true;
  std::string detail;
  for (const Scenario& scenario : cli_scenarios()) {
    const fs::path dir = root / scenario.name;
    fs::create_directories(dir);
    const fs::path config = dir / "config.json";
    write_text(config, scenario.config.dump(2) + "\n");

    const std::string base = scenario.command + " --config " +
                             config.string() + " --out " + dir.string();
    const int rc1 = run_cli(base + "/run1");
    const int rc2 = run_cli(base + "/run2");
    const int rc3 = run_cli(base + "/run3 --workers 3");
    if (rc1 != 0 || rc2 != 0 || rc3 != 0) {
      ok = false;
      detail = scenario.name + " exit codes " + std::to_string(rc1) + "/" +
               std::to_string(rc2) + "/" + std::to_string(rc3);
      break;
    }
    std::map<std::string, std::string> run1, run2, run3;
    if (!read_all_files(dir / "run1", run1) ||
        !read_all_files(dir / "run2", run2) ||
        !read_all_files(dir / "run3", run3) || run1.empty()) {
      ok = false;
      detail = scenario.name + " produced no artifacts";
      break;
    }
    if (run1 != run2 || run1 != run3) {
      ok = false;
      detail = scenario.name + " artifacts differ between runs";
      break;
    }
  }
  if (ok) {
    detail = std::to_string(cli_scenarios().size()) +
             " scenarios byte-identical across reruns and worker counts";
  }
  fs::remove_all(root, ec);
  report(ok, "command-line determinism", detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-cli-binary>\n", argv[0]);
    return 2;
  }
  g_cli_path = argv[1];

  criterion_scaling_identity();
  criterion_semi_stability();
  criterion_cofactor_validity();
  criterion_scale_family();
  criterion_phi_composition();
  criterion_compound_marginals();
  criterion_ep_marginals();
  criterion_self_similarity();
  criterion_ar1_stationarity();
  criterion_modified_scheme();
  criterion_quantiles();
  criterion_determinism();

  if (g_failures > 0) {
    std::printf("ACCEPTANCE: %d of 12 criteria failed\n", g_failures);
    return 1;
  }
  std::printf("ACCEPTANCE: all 12 criteria passed\n");
  return 0;
}
