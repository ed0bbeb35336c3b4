#include "wright/fox_wright_bounds.hpp"

#include <cmath>

namespace wright {

namespace {

double log_psi(const FoxWrightSpec& s, int k) {
  double lp = 0.0;
  for (const auto& [a, A] : s.upper) lp += log_gamma(a + k * A);
  for (const auto& [b, B] : s.lower) lp -= log_gamma(b + k * B);
  return lp;
}

// Strictness slack in log space; ties at the level of lgamma rounding noise
// must not count as strict inequalities.
constexpr double kTieEps = 1e-12;

}  // namespace

PsiMoments psi_moments(const FoxWrightSpec& s) {
  for (const auto& [a, A] : s.upper)
    for (int k = 0; k <= 2; ++k)
      if (!(a + k * A > 0.0)) throw std::domain_error("psi_moments: nonpositive gamma argument");
  for (const auto& [b, B] : s.lower)
    for (int k = 0; k <= 2; ++k)
      if (!(b + k * B > 0.0)) throw std::domain_error("psi_moments: nonpositive gamma argument");
  return {std::exp(log_psi(s, 0)), std::exp(log_psi(s, 1)), std::exp(log_psi(s, 2))};
}

bool bound_conditions(const PsiMoments& m, std::vector<BoundResult::Entry>* ledger) {
  const double l0 = std::log(m.psi0), l1 = std::log(m.psi1), l2 = std::log(m.psi2);
  const bool decreasing = l1 > l2 + kTieEps;
  const bool log_convex = 2.0 * l1 < l0 + l2 - kTieEps;
  if (ledger) {
    ledger->push_back({"psi1 > psi2", m.psi1, m.psi2, decreasing});
    ledger->push_back({"psi1^2 < psi0*psi2", m.psi1 * m.psi1, m.psi0 * m.psi2, log_convex});
  }
  return decreasing && log_convex;
}

BoundResult two_sided_bound(const FoxWrightSpec& s, double x) {
  s.require_valid();
  if (!(x >= 0.0)) throw std::domain_error("two_sided_bound: x must be >= 0");
  const PsiMoments m = psi_moments(s);
  BoundResult r;
  r.conditions_hold = bound_conditions(m, &r.ledger);
  r.lower = m.psi0 * std::exp(m.psi1 * x / m.psi0);
  r.upper = m.psi0 + std::expm1(x) * m.psi1;
  return r;
}

}  // namespace wright
