#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "maxsemi/corefn.hpp"

namespace maxsemi {

struct NamedPsi {
  std::string name;
  PsiFunction psi;
};

// The six bundled exponent functions: each branch with a constant,
// one-harmonic, and two-harmonic level. The single-harmonic laws use
// (a, b) = (2, 2^{+/-1}), alpha = 1, amplitude 0.1; the two-harmonic laws
// use (a, b) = (4, 2^{+/-1}), alpha = 2, amplitudes (0.05, 0.03).
const std::vector<NamedPsi>& shipped_psis();

// Lookup by name ("frechet-constant", "weibull-two-harmonic", ...);
// DomainError for unknown names.
const PsiFunction& shipped_psi(std::string_view name);

}  // namespace maxsemi
