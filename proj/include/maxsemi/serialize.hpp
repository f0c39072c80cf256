#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "maxsemi/distributions.hpp"

namespace maxsemi {

// Insertion-ordered JSON keeps emitted records stable byte-for-byte.
using Json = nlohmann::ordered_json;

using DistributionVariant = std::variant<MaxSemiStableDF, PhiMaxSemiStableDF>;

std::string branch_name(Branch branch);
Branch branch_from_name(const std::string& name);

// Exponent-function record:
//   {branch, alpha, a, b, base, harmonics: [{amplitude, phase}...], period}
// On load alpha and period may be omitted (they are derived); when present
// they are validated against (a, b). All construction failures surface as
// ConfigError naming the violated invariant.
Json psi_to_json(const PsiFunction& psi);
PsiFunction psi_from_json(const Json& j);

// Transform record: {kind: "exponential"} or {kind: "gamma", beta}.
Json lt_to_json(const LaplaceTransformSpec& phi);
LaplaceTransformSpec lt_from_json(const Json& j);

// Distribution record: {type: "max-semi-stable", psi} or
// {type: "phi-max-semi-stable", phi, psi}.
Json distribution_to_json(const DistributionVariant& dist);
DistributionVariant distribution_from_json(const Json& j);

const UnivariateDF& as_univariate(const DistributionVariant& dist);

// Report serializers (nlohmann ADL hooks), so reports drop into Json
// directly.
void to_json(Json& j, const KSReport& r);
void to_json(Json& j, const MonotoneDFReport& r);
void to_json(Json& j, const CmOrderResult& r);
void to_json(Json& j, const CmProxyReport& r);
void to_json(Json& j, const GridCheckReport& r);
void to_json(Json& j, const ScalingIdentityReport& r);
void to_json(Json& j, const ConstancyReport& r);

// Shortest-unambiguous decimal with 17 significant digits; every CSV number
// goes through here so repeated runs emit identical bytes.
std::string format_double(double v);

}  // namespace maxsemi
