#include "maxsemi/cli.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "maxsemi/distributions.hpp"
#include "maxsemi/errors.hpp"
#include "maxsemi/processes.hpp"
#include "maxsemi/serialize.hpp"
#include "maxsemi/timeseries.hpp"

namespace maxsemi {
namespace {

namespace fs = std::filesystem;

Json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open \"" + path + "\"");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  return j;
}

const Json& member(const Json& config, const char* key) {
  if (!config.contains(key)) {
    throw ConfigError(std::string("config: missing \"") + key + "\"");
  }
  return config.at(key);
}

double required_number(const Json& config, const char* key) {
  const Json& v = member(config, key);
  if (!v.is_number()) {
    throw ConfigError(std::string("config: \"") + key + "\" must be a number");
  }
  return v.get<double>();
}

std::vector<double> times_from_config(const Json& config) {
  const Json& arr = member(config, "times");
  if (!arr.is_array() || arr.empty()) {
    throw ConfigError("config: \"times\" must be a nonempty array of numbers");
  }
  std::vector<double> times;
  for (const Json& v : arr) {
    if (!v.is_number()) {
      throw ConfigError("config: \"times\" must contain only numbers");
    }
    times.push_back(v.get<double>());
  }
  return times;
}

std::vector<std::size_t> checkpoints_from_config(const Json& config,
                                                 std::size_t length) {
  if (!config.contains("checkpoints")) {
    return {0, length / 2, length};
  }
  const Json& arr = config.at("checkpoints");
  if (!arr.is_array() || arr.empty()) {
    throw ConfigError(
        "config: \"checkpoints\" must be a nonempty array of step indices");
  }
  std::vector<std::size_t> checkpoints;
  for (const Json& v : arr) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
      throw ConfigError("config: checkpoints must be nonnegative integers");
    }
    checkpoints.push_back(v.get<std::size_t>());
  }
  return checkpoints;
}

std::ofstream open_out(const fs::path& dir, const char* name) {
  std::ofstream out(dir / name);
  if (!out) {
    throw ConfigError("cannot write \"" + (dir / name).string() + "\"");
  }
  return out;
}

void write_json_file(const fs::path& dir, const char* name, const Json& j) {
  std::ofstream out = open_out(dir, name);
  out << j.dump(2) << '\n';
}

// Accumulates named check records for report.json; the report fails as soon
// as any single check does.
struct CheckCollector {
  Json checks = Json::array();
  bool all_pass = true;

  void add(const std::string& name, const Json& fields, bool pass) {
    Json entry;
    entry["check"] = name;
    for (auto it = fields.begin(); it != fields.end(); ++it) {
      if (it.key() != "pass") entry[it.key()] = it.value();
    }
    entry["pass"] = pass;
    checks.push_back(std::move(entry));
    all_pass = all_pass && pass;
  }
};

int finish_report(const fs::path& out, const std::string& command,
                  Json params, const CheckCollector& collector) {
  Json report;
  report["command"] = command;
  if (!params.is_null()) report["params"] = std::move(params);
  report["checks"] = collector.checks;
  report["pass"] = collector.all_pass;
  write_json_file(out, "report.json", report);
  return collector.all_pass ? 0 : 2;
}

int cmd_make_dist(const Json& config, const fs::path& out) {
  const DistributionVariant dist =
      distribution_from_json(member(config, "distribution"));
  const Json normalized = distribution_to_json(dist);
  write_json_file(out, "normalized.json", normalized);
  std::cout << normalized.dump(2) << '\n';
  return 0;
}

int cmd_eval(const Json& config, const fs::path& out) {
  const DistributionVariant dist =
      distribution_from_json(member(config, "distribution"));
  const UnivariateDF& df = as_univariate(dist);
  const int points = config.value("points", 99);
  if (points < 1) throw ConfigError("config: \"points\" must be >= 1");
  const double abs_lo = config.value("abs_lo", 1e-3);
  const double abs_hi = config.value("abs_hi", 1e3);

  std::ofstream cdf_csv = open_out(out, "cdf.csv");
  cdf_csv << "x,cdf\n";
  for (const double x : support_grid(df.branch(), static_cast<std::size_t>(points),
                                     abs_lo, abs_hi)) {
    cdf_csv << format_double(x) << ',' << format_double(df.cdf(x)) << '\n';
  }

  std::ofstream q_csv = open_out(out, "quantiles.csv");
  q_csv << "u,quantile\n";
  for (int i = 1; i <= points; ++i) {
    const double u = static_cast<double>(i) / (points + 1.0);
    q_csv << format_double(u) << ',' << format_double(df.quantile(u)) << '\n';
  }
  return 0;
}

int cmd_sample(const Json& config, const fs::path& out, std::uint64_t seed) {
  const DistributionVariant dist =
      distribution_from_json(member(config, "distribution"));
  const UnivariateDF& df = as_univariate(dist);
  const int n = config.value("n", 1000);
  if (n < 1) throw ConfigError("config: \"n\" must be >= 1");
  const double tau = config.value("tau", 1.0);
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw ConfigError("config: \"tau\" must be positive and finite");
  }
  const std::string format = config.value("format", std::string("csv"));

  const std::vector<double> draws =
      sample_power(df, tau, static_cast<std::size_t>(n), seed);

  if (format == "csv") {
    std::ofstream csv = open_out(out, "samples.csv");
    csv << "value\n";
    for (const double v : draws) csv << format_double(v) << '\n';
  } else if (format == "json") {
    Json j;
    j["n"] = n;
    j["seed"] = seed;
    j["tau"] = tau;
    j["samples"] = draws;
    write_json_file(out, "samples.json", j);
  } else {
    throw ConfigError("config: \"format\" must be \"csv\" or \"json\"");
  }
  return 0;
}

void verify_common_tail(const UnivariateDF& df, CheckCollector& collector) {
  const MonotoneDFReport mono = monotone_df_check(
      [&df](double x) { return df.cdf(x); },
      support_grid(df.branch(), grids::cdf_monotone));
  collector.add("cdf_monotone", Json(mono), mono.pass);

  const std::vector<double> u_probes = {0.05, 0.25, 0.5, 0.75, 0.95};
  const std::vector<double> x_probes = df.branch() == Branch::frechet
                                           ? std::vector<double>{0.5, 1.0, 3.0}
                                           : std::vector<double>{-3.0, -1.0, -0.5};
  double max_u_err = 0.0;
  for (const double u : u_probes) {
    max_u_err = std::max(max_u_err, std::abs(df.cdf(df.quantile(u)) - u));
  }
  double max_x_err = 0.0;
  for (const double x : x_probes) {
    const double back = df.quantile(df.cdf(x));
    max_x_err =
        std::max(max_x_err, std::abs(back - x) / std::max(1.0, std::abs(x)));
  }
  const bool pass = max_u_err <= tol::quantile_agreement &&
                    max_x_err <= tol::quantile_agreement;
  collector.add("quantile_roundtrip",
                Json{{"max_u_err", max_u_err}, {"max_x_err", max_x_err}}, pass);
}

void verify_max_semi_stable(const MaxSemiStableDF& f,
                            CheckCollector& collector) {
  const PsiFunction& psi = f.psi();
  const bool frechet = psi.branch() == Branch::frechet;

  const ScalingIdentityReport scaling =
      check_scaling_identity(psi, grids::identity_default);
  collector.add("scaling_identity", Json(scaling), scaling.pass);

  const GridCheckReport stab =
      max_semi_stability_check(f, grids::identity_default);
  collector.add("semi_stability", Json(stab), stab.pass);

  {
    const CofactorResult res = semi_sd_cofactor_df(f, psi.b());
    Json fields;
    fields["c"] = psi.b();
    fields["a_of_c"] = res.a_of_c;
    const Json mono = res.report;
    for (auto it = mono.begin(); it != mono.end(); ++it) {
      fields[it.key()] = it.value();
    }
    collector.add("cofactor_validity", fields, res.report.pass);

    const GridCheckReport closed =
        cofactor_closed_form_check(f, res.df, grids::identity_default);
    collector.add("cofactor_closed_form", Json(closed), closed.pass);
  }

  {
    const double wrong_c = frechet ? 0.5 : 2.0;
    bool rejected = false;
    try {
      semi_sd_cofactor_df(f, wrong_c);
    } catch (const InvalidCofactorError&) {
      rejected = true;
    }
    collector.add("cofactor_wrong_direction_rejected",
                  Json{{"c", wrong_c}, {"rejected", rejected}}, rejected);
  }

  if (!psi.level().is_constant()) {
    // A non-constant level admits a cofactor only at the law's own scale.
    const double foreign_c = frechet ? 1.5 * psi.b() : psi.b() / 1.5;
    bool rejected = false;
    try {
      semi_sd_cofactor_df(f, foreign_c);
    } catch (const InvalidCofactorError&) {
      rejected = true;
    }
    collector.add("cofactor_foreign_scale_rejected",
                  Json{{"c", foreign_c}, {"rejected", rejected}}, rejected);
  } else {
    // Constant level: the whole one-parameter scale family factorizes.
    const std::vector<double> scales =
        frechet ? std::vector<double>{1.3, 2.0, 5.0}
                : std::vector<double>{1.0 / 1.3, 0.5, 0.2};
    double max_a_err = 0.0;
    double max_identity_err = 0.0;
    bool family_pass = true;
    for (const double c : scales) {
      const CofactorResult res = semi_sd_cofactor_df(f, c);
      const double expected_a =
          frechet ? std::pow(c, psi.alpha()) : std::pow(c, -psi.alpha());
      max_a_err = std::max(max_a_err, std::abs(res.a_of_c - expected_a));
      const GridCheckReport closed =
          cofactor_closed_form_check(f, res.df, grids::identity_default);
      max_identity_err = std::max(max_identity_err, closed.max_abs_err);
      family_pass = family_pass && res.report.pass && closed.pass;
    }
    family_pass = family_pass && max_a_err <= tol::param_consistency;
    collector.add("max_sd_family",
                  Json{{"scales", scales},
                       {"max_a_err", max_a_err},
                       {"max_identity_err", max_identity_err}},
                  family_pass);

    // With a closed-form quantile available, cross-check it against the
    // generic root search.
    const std::vector<double> targets = {5.0, 1.0, 0.2};
    double max_q_err = 0.0;
    for (const double target : targets) {
      const double closed = detail::quantile_from_psi_target(psi, target);
      const double rooted = detail::quantile_root_search(psi, target);
      max_q_err = std::max(
          max_q_err, std::abs(closed - rooted) / std::max(1.0, std::abs(closed)));
    }
    collector.add("quantile_closed_vs_root", Json{{"max_rel_err", max_q_err}},
                  max_q_err <= tol::quantile_agreement);
  }

  verify_common_tail(f, collector);
}

void verify_phi_max(const PhiMaxSemiStableDF& g, CheckCollector& collector) {
  const PsiFunction& psi = g.psi();
  const ScalingIdentityReport scaling =
      check_scaling_identity(psi, grids::identity_default);
  collector.add("scaling_identity", Json(scaling), scaling.pass);

  const GridCheckReport comp = phi_composition_check(g, grids::identity_default);
  collector.add("phi_composition", Json(comp), comp.pass);

  const double c = psi.branch() == Branch::frechet
                       ? std::pow(psi.b(), -psi.alpha())
                       : std::pow(psi.b(), psi.alpha());
  const LtCofactorResult lt = lt_semi_sd_cofactor(g.phi(), c);
  Json lt_fields;
  lt_fields["c"] = c;
  const Json cm = lt.cm;
  for (auto it = cm.begin(); it != cm.end(); ++it) {
    lt_fields[it.key()] = it.value();
  }
  collector.add("lt_cm_proxy", lt_fields, lt.cm.all_pass);

  if (g.phi().kind() == LaplaceTransformSpec::Kind::exponential) {
    const double p = 1.0 / psi.a();
    const GridCheckReport geo = geometric_max_identity_check(
        g, p, psi.b(), grids::identity_default);
    Json fields;
    fields["p"] = p;
    fields["c"] = psi.b();
    fields["max_abs_err"] = geo.max_abs_err;
    collector.add("geometric_max_identity", fields, geo.pass);
  }

  verify_common_tail(g, collector);
}

int cmd_verify(const Json& config, const fs::path& out) {
  const DistributionVariant dist =
      distribution_from_json(member(config, "distribution"));
  CheckCollector collector;
  if (const auto* f = std::get_if<MaxSemiStableDF>(&dist)) {
    verify_max_semi_stable(*f, collector);
  } else {
    verify_phi_max(std::get<PhiMaxSemiStableDF>(dist), collector);
  }
  Json params;
  params["distribution"] = distribution_to_json(dist);
  return finish_report(out, "verify", std::move(params), collector);
}

void write_paths_csv(const fs::path& out,
                     const std::vector<ExtremalPath>& paths) {
  std::ofstream csv = open_out(out, "paths.csv");
  csv << "replicate,time,value\n";
  for (std::size_t r = 0; r < paths.size(); ++r) {
    for (std::size_t i = 0; i < paths[r].times.size(); ++i) {
      csv << r << ',' << format_double(paths[r].times[i]) << ','
          << format_double(paths[r].values[i]) << '\n';
    }
  }
}

std::vector<double> slice_at(const std::vector<ExtremalPath>& paths,
                             std::size_t index) {
  std::vector<double> values;
  values.reserve(paths.size());
  for (const ExtremalPath& path : paths) values.push_back(path.values[index]);
  return values;
}

int replicates_from_config(const Json& config, int minimum) {
  // "n" is accepted as an alias for "replicates" in simulation configs.
  int replicates = 1000;
  if (config.contains("replicates")) {
    replicates = config.at("replicates").get<int>();
  } else if (config.contains("n")) {
    replicates = config.at("n").get<int>();
  }
  if (replicates < minimum) {
    throw ConfigError("config: \"replicates\" must be >= " +
                      std::to_string(minimum));
  }
  return replicates;
}

int cmd_sim_ep(const Json& config, const fs::path& out, std::uint64_t seed,
               int workers) {
  const DistributionVariant dist =
      distribution_from_json(member(config, "distribution"));
  const UnivariateDF& df = as_univariate(dist);
  const std::vector<double> times = times_from_config(config);
  const int replicates = replicates_from_config(config, 1);

  const std::vector<ExtremalPath> paths = simulate_ep_paths(
      df, times, static_cast<std::size_t>(replicates), seed, workers);
  write_paths_csv(out, paths);

  CheckCollector collector;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const KSReport ks =
        ks_one_sample(slice_at(paths, i), [&df, t](double x) {
          return std::pow(df.cdf(x), t);
        });
    collector.add("ep_marginal@t=" + format_double(t), Json(ks), ks.pass);
  }
  Json params{{"replicates", replicates}, {"seed", seed}, {"times", times}};
  return finish_report(out, "sim-ep", std::move(params), collector);
}

// The subordinator transform: either an explicit {"phi": {...}} record or a
// bare {"beta": ...} shorthand for the gamma family (exponential == beta 1).
LaplaceTransformSpec subordinator_phi(const Json& config) {
  if (config.contains("phi")) return lt_from_json(config.at("phi"));
  const double beta = required_number(config, "beta");
  try {
    return LaplaceTransformSpec::gamma(beta);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

int cmd_sim_compound_ep(const Json& config, const fs::path& out,
                        std::uint64_t seed, int workers) {
  const DistributionVariant dist =
      distribution_from_json(member(config, "distribution"));
  const UnivariateDF& df = as_univariate(dist);
  const LaplaceTransformSpec phi = subordinator_phi(config);
  const double beta =
      phi.kind() == LaplaceTransformSpec::Kind::gamma ? phi.beta() : 1.0;
  const std::vector<double> times = times_from_config(config);
  const int replicates = replicates_from_config(config, 1);
  const int curve_points = config.value("curve_points", 201);
  if (curve_points < 2) {
    throw ConfigError("config: \"curve_points\" must be >= 2");
  }

  const std::vector<ExtremalPath> paths = simulate_compound_eps(
      df, beta, times, static_cast<std::size_t>(replicates), seed, workers);
  write_paths_csv(out, paths);

  const std::vector<double> curve_grid =
      support_grid(df.branch(), static_cast<std::size_t>(curve_points));
  for (const double t : times) {
    const std::string name = "analytic_t=" + format_double(t) + ".csv";
    std::ofstream analytic = open_out(out, name.c_str());
    analytic << "x,cdf\n";
    for (const double x : curve_grid) {
      analytic << format_double(x) << ','
               << format_double(compound_cdf_analytic(phi, df, t, x)) << '\n';
    }
  }

  CheckCollector collector;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const KSReport ks =
        ks_one_sample(slice_at(paths, i), [&phi, &df, t](double x) {
          return compound_cdf_analytic(phi, df, t, x);
        });
    collector.add("compound_marginal@t=" + format_double(t), Json(ks),
                  ks.pass);
  }
  Json params{{"replicates", replicates},
              {"seed", seed},
              {"beta", beta},
              {"times", times}};
  return finish_report(out, "sim-compound-ep", std::move(params), collector);
}

void write_series_csv(const fs::path& out, const SeriesMatrix& series) {
  std::ofstream csv = open_out(out, "series.csv");
  csv << "replicate,n,value\n";
  for (std::size_t r = 0; r < series.replicates(); ++r) {
    for (std::size_t k = 0; k < series.steps(); ++k) {
      csv << r << ',' << k << ',' << format_double(series.at(r, k)) << '\n';
    }
  }
}

Ar1Options ar1_options_from_config(const Json& config) {
  Ar1Options options;
  options.length = config.value("length", 200);
  if (options.length < 1) throw ConfigError("config: \"length\" must be >= 1");
  options.burn_in = config.value("burn_in", options.length);
  const std::string init = config.value("init", std::string("marginal"));
  if (init == "marginal") {
    options.init = Ar1Init::from_marginal;
  } else if (init == "fixed") {
    options.init = Ar1Init::fixed;
    options.init_value = required_number(config, "init_value");
  } else {
    throw ConfigError("config: \"init\" must be \"marginal\" or \"fixed\"");
  }
  return options;
}

void add_stationarity_checks(const SeriesMatrix& series,
                             const UnivariateDF& marginal,
                             const std::vector<std::size_t>& checkpoints,
                             CheckCollector& collector) {
  const std::vector<CheckpointKS> reports =
      stationarity_report(series, marginal, checkpoints);
  for (const CheckpointKS& entry : reports) {
    collector.add("stationarity@n=" + std::to_string(entry.checkpoint),
                  Json(entry.ks), entry.ks.pass);
  }
}

int cmd_sim_ar1(const Json& config, const fs::path& out, std::uint64_t seed,
                int workers) {
  const DistributionVariant dist =
      distribution_from_json(member(config, "distribution"));
  const auto* f = std::get_if<MaxSemiStableDF>(&dist);
  if (f == nullptr) {
    throw ConfigError(
        "sim-ar1 requires a \"max-semi-stable\" marginal distribution");
  }
  const double rho = required_number(config, "rho");
  const Ar1Options options = ar1_options_from_config(config);
  const int replicates = replicates_from_config(config, 100);
  const std::vector<std::size_t> checkpoints =
      checkpoints_from_config(config, options.length);

  const SeriesMatrix series =
      simulate_max_ar1(*f, rho, options, static_cast<std::size_t>(replicates),
                       seed, workers);
  write_series_csv(out, series);

  CheckCollector collector;
  const GridCheckReport fact =
      ar1_factorization_check(*f, rho, grids::identity_default);
  collector.add("ar1_factorization", Json(fact), fact.pass);
  add_stationarity_checks(series, *f, checkpoints, collector);

  Json params{{"replicates", replicates},
              {"seed", seed},
              {"rho", rho},
              {"length", options.length}};
  return finish_report(out, "sim-ar1", std::move(params), collector);
}

int cmd_sim_ar1_mod(const Json& config, const fs::path& out,
                    std::uint64_t seed, int workers) {
  const DistributionVariant dist =
      distribution_from_json(member(config, "distribution"));
  const auto* g = std::get_if<PhiMaxSemiStableDF>(&dist);
  if (g == nullptr) {
    throw ConfigError(
        "sim-ar1-mod requires a \"phi-max-semi-stable\" marginal distribution");
  }
  const double p = required_number(config, "p");
  const double rho = required_number(config, "rho");
  const Ar1Options options = ar1_options_from_config(config);
  const int replicates = replicates_from_config(config, 100);
  const std::vector<std::size_t> checkpoints =
      checkpoints_from_config(config, options.length);

  const SeriesMatrix series = simulate_modified_max_ar1(
      *g, p, rho, options, static_cast<std::size_t>(replicates), seed,
      workers);
  write_series_csv(out, series);

  CheckCollector collector;
  const GridCheckReport geo = geometric_max_identity_check(
      *g, p, g->psi().b(), grids::identity_default);
  collector.add("geometric_max_identity", Json(geo), geo.pass);

  const int geom_n = config.value("geom_n", 10000);
  if (geom_n < 100) throw ConfigError("config: \"geom_n\" must be >= 100");
  const std::vector<double> geom_draws = geometric_max_sampler(
      *g, p, g->psi().b(), static_cast<std::size_t>(geom_n), seed + 1);
  const KSReport geom_ks = ks_one_sample(
      geom_draws, [g](double x) { return g->cdf(x); });
  collector.add("geometric_max_law", Json(geom_ks), geom_ks.pass);

  add_stationarity_checks(series, *g, checkpoints, collector);

  Json params{{"replicates", replicates},
              {"seed", seed},
              {"p", p},
              {"rho", rho},
              {"length", options.length}};
  return finish_report(out, "sim-ar1-mod", std::move(params), collector);
}

}  // namespace

int run_command(const std::string& command, const RunOptions& options) {
  try {
    const Json config = load_config(options.config_path);
    const fs::path out(options.out_dir);
    fs::create_directories(out);
    const std::uint64_t seed = options.seed_override.has_value()
                                   ? *options.seed_override
                                   : config.value("seed", std::uint64_t{1});
    const int workers = options.workers;

    if (command == "make-dist") return cmd_make_dist(config, out);
    if (command == "eval") return cmd_eval(config, out);
    if (command == "sample") return cmd_sample(config, out, seed);
    if (command == "verify") return cmd_verify(config, out);
    if (command == "sim-ep") return cmd_sim_ep(config, out, seed, workers);
    if (command == "sim-compound-ep") {
      return cmd_sim_compound_ep(config, out, seed, workers);
    }
    if (command == "sim-ar1") return cmd_sim_ar1(config, out, seed, workers);
    if (command == "sim-ar1-mod") {
      return cmd_sim_ar1_mod(config, out, seed, workers);
    }
    throw ConfigError("unknown command \"" + command + "\"");
  } catch (const std::exception& e) {
    Json err;
    err["error"] = e.what();
    std::cerr << err.dump() << '\n';
    return 1;
  }
}

}  // namespace maxsemi
