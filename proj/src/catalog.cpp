#include "maxsemi/catalog.hpp"

#include <cmath>
#include <numbers>

namespace maxsemi {

namespace {

std::vector<NamedPsi> build_catalog() {
  const double T = std::log(2.0);
  const double third_pi = std::numbers::pi / 3.0;
  std::vector<NamedPsi> out;
  out.push_back({"frechet-constant",
                 PsiFunction::from_ab(Branch::frechet, 2.0, 2.0,
                                      PeriodicLevel(1.0, {}, T))});
  out.push_back({"frechet-one-harmonic",
                 PsiFunction::from_ab(Branch::frechet, 2.0, 2.0,
                                      PeriodicLevel(1.0, {{0.1, 0.0}}, T))});
  out.push_back(
      {"frechet-two-harmonic",
       PsiFunction::from_ab(
           Branch::frechet, 4.0, 2.0,
           PeriodicLevel(1.0, {{0.05, 0.0}, {0.03, third_pi}}, T))});
  out.push_back({"weibull-constant",
                 PsiFunction::from_ab(Branch::weibull, 2.0, 0.5,
                                      PeriodicLevel(1.0, {}, T))});
  out.push_back({"weibull-one-harmonic",
                 PsiFunction::from_ab(Branch::weibull, 2.0, 0.5,
                                      PeriodicLevel(1.0, {{0.1, 0.0}}, T))});
  out.push_back(
      {"weibull-two-harmonic",
       PsiFunction::from_ab(
           Branch::weibull, 4.0, 0.5,
           PeriodicLevel(1.0, {{0.05, 0.0}, {0.03, third_pi}}, T))});
  return out;
}

}  // namespace

const std::vector<NamedPsi>& shipped_psis() {
  static const std::vector<NamedPsi> catalog = build_catalog();
  return catalog;
}

const PsiFunction& shipped_psi(std::string_view name) {
  for (const NamedPsi& entry : shipped_psis())
    if (entry.name == name) return entry.psi;
  throw DomainError("shipped_psi: unknown name '" + std::string(name) + "'");
}

}  // namespace maxsemi
