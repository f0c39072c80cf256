#include "maxsemi/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "maxsemi/errors.hpp"

namespace maxsemi {

namespace {

[[noreturn]] void bad_config(const std::string& what) {
  throw ConfigError("config: " + what);
}

double require_number(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    bad_config(std::string("missing numeric field \"") + key + "\"");
  }
  return j.at(key).get<double>();
}

std::string require_string(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    bad_config(std::string("missing string field \"") + key + "\"");
  }
  return j.at(key).get<std::string>();
}

}  // namespace

std::string branch_name(Branch branch) {
  return branch == Branch::frechet ? "frechet" : "weibull";
}

Branch branch_from_name(const std::string& name) {
  if (name == "frechet") return Branch::frechet;
  if (name == "weibull") return Branch::weibull;
  bad_config("branch must be \"frechet\" or \"weibull\", got \"" + name + "\"");
}

Json psi_to_json(const PsiFunction& psi) {
  Json j;
  j["branch"] = branch_name(psi.branch());
  j["alpha"] = psi.alpha();
  j["a"] = psi.a();
  j["b"] = psi.b();
  j["base"] = psi.level().base();
  Json harmonics = Json::array();
  for (const Harmonic& h : psi.level().harmonics()) {
    harmonics.push_back(Json{{"amplitude", h.amplitude}, {"phase", h.phase}});
  }
  j["harmonics"] = harmonics;
  j["period"] = psi.level().period();
  return j;
}

PsiFunction psi_from_json(const Json& j) {
  if (!j.is_object()) bad_config("exponent record must be a JSON object");
  const Branch branch = branch_from_name(require_string(j, "branch"));
  const double a = require_number(j, "a");
  const double b = require_number(j, "b");
  const double base = require_number(j, "base");

  std::vector<Harmonic> harmonics;
  if (j.contains("harmonics")) {
    const Json& arr = j.at("harmonics");
    if (!arr.is_array()) bad_config("\"harmonics\" must be an array");
    for (const Json& item : arr) {
      Harmonic h;
      h.amplitude = require_number(item, "amplitude");
      h.phase = item.contains("phase") ? require_number(item, "phase") : 0.0;
      harmonics.push_back(h);
    }
  }

  try {
    const double derived_period = std::fabs(std::log(b));
    if (j.contains("period")) {
      const double period = require_number(j, "period");
      if (!(std::fabs(period - derived_period) <=
            tol::param_consistency * std::max(1.0, derived_period))) {
        bad_config("\"period\" disagrees with |ln b|");
      }
    }
    PeriodicLevel level(base, std::move(harmonics), derived_period);
    if (j.contains("alpha")) {
      const double alpha = require_number(j, "alpha");
      return PsiFunction(branch, alpha, a, b, std::move(level));
    }
    return PsiFunction::from_ab(branch, a, b, std::move(level));
  } catch (const DomainError& e) {
    bad_config(e.what());
  }
}

Json lt_to_json(const LaplaceTransformSpec& phi) {
  Json j;
  if (phi.kind() == LaplaceTransformSpec::Kind::exponential) {
    j["kind"] = "exponential";
  } else {
    j["kind"] = "gamma";
    j["beta"] = phi.beta();
  }
  return j;
}

LaplaceTransformSpec lt_from_json(const Json& j) {
  if (!j.is_object()) bad_config("transform record must be a JSON object");
  const std::string kind = require_string(j, "kind");
  try {
    if (kind == "exponential") return LaplaceTransformSpec::exponential();
    if (kind == "gamma") {
      return LaplaceTransformSpec::gamma(require_number(j, "beta"));
    }
  } catch (const DomainError& e) {
    bad_config(e.what());
  }
  bad_config("transform kind must be \"exponential\" or \"gamma\", got \"" +
             kind + "\"");
}

Json distribution_to_json(const DistributionVariant& dist) {
  Json j;
  if (const auto* f = std::get_if<MaxSemiStableDF>(&dist)) {
    j["type"] = "max-semi-stable";
    j["psi"] = psi_to_json(f->psi());
  } else {
    const auto& g = std::get<PhiMaxSemiStableDF>(dist);
    j["type"] = "phi-max-semi-stable";
    j["phi"] = lt_to_json(g.phi());
    j["psi"] = psi_to_json(g.psi());
  }
  return j;
}

DistributionVariant distribution_from_json(const Json& j) {
  if (!j.is_object()) bad_config("distribution record must be a JSON object");
  const std::string type = require_string(j, "type");
  if (!j.contains("psi")) bad_config("missing \"psi\" record");
  if (type == "max-semi-stable") {
    return MaxSemiStableDF(psi_from_json(j.at("psi")));
  }
  if (type == "phi-max-semi-stable") {
    if (!j.contains("phi")) bad_config("missing \"phi\" record");
    return PhiMaxSemiStableDF(lt_from_json(j.at("phi")),
                              psi_from_json(j.at("psi")));
  }
  bad_config(
      "type must be \"max-semi-stable\" or \"phi-max-semi-stable\", got \"" +
      type + "\"");
}

const UnivariateDF& as_univariate(const DistributionVariant& dist) {
  return std::visit(
      [](const auto& d) -> const UnivariateDF& { return d; }, dist);
}

void to_json(Json& j, const KSReport& r) {
  j = Json{{"statistic", r.statistic},
           {"n", r.n},
           {"threshold", r.threshold},
           {"pass", r.pass}};
}

void to_json(Json& j, const MonotoneDFReport& r) {
  j = Json{{"violations", r.violations}, {"max_decrease", r.max_decrease},
           {"lower_value", r.lower_value}, {"upper_value", r.upper_value},
           {"limits_ok", r.limits_ok},     {"pass", r.pass}};
}

void to_json(Json& j, const CmOrderResult& r) {
  j = Json{{"order", r.order}, {"worst", r.worst}, {"pass", r.pass}};
}

void to_json(Json& j, const CmProxyReport& r) {
  j = Json{{"orders", r.orders}, {"all_pass", r.all_pass}};
}

void to_json(Json& j, const GridCheckReport& r) {
  j = Json{{"max_abs_err", r.max_abs_err}, {"pass", r.pass}};
}

void to_json(Json& j, const ScalingIdentityReport& r) {
  j = Json{{"max_rel_err", r.max_rel_err}, {"pass", r.pass}};
}

void to_json(Json& j, const ConstancyReport& r) {
  j = Json{{"t1_violation", r.t1_violation},
           {"t2_violation", r.t2_violation},
           {"both_periodic", r.both_periodic},
           {"ratio_irrational", r.ratio_irrational},
           {"forces_constant", r.forces_constant},
           {"spread", r.spread},
           {"is_constant", r.is_constant}};
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace maxsemi
