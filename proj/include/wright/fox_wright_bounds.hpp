#pragma once

#include <string>
#include <vector>

#include "wright/series.hpp"

namespace wright {

/// First three coefficient moments psi_k = prod Gamma(a_i + k A_i) / prod Gamma(b_j + k B_j).
struct PsiMoments {
  double psi0 = 0.0;
  double psi1 = 0.0;
  double psi2 = 0.0;
};

struct BoundResult {
  double lower = 0.0;
  double upper = 0.0;
  bool conditions_hold = false;
  // Both sides of each applicability inequality, for display.
  struct Entry {
    std::string name;
    double lhs;
    double rhs;
    bool holds;
  };
  std::vector<Entry> ledger;
};

PsiMoments psi_moments(const FoxWrightSpec& s);

/// Strict inequalities psi1 > psi2 and psi1^2 < psi0 psi2, compared in log
/// space. A comparison that is not strict beyond floating-point noise counts
/// as not holding (both moments sides are reported either way).
bool bound_conditions(const PsiMoments& m, std::vector<BoundResult::Entry>* ledger = nullptr);

/// Exponential two-sided enclosure of the Fox-Wright sum at x >= 0:
///   psi0 * exp(psi1 x / psi0)  <=  value  <=  psi0 + (e^x - 1) psi1.
/// When the applicability conditions fail the formula values are still
/// returned, flagged advisory via conditions_hold = false.
BoundResult two_sided_bound(const FoxWrightSpec& s, double x);

}  // namespace wright
