#pragma once

#include <stdexcept>

namespace wright {

/// Natural log of the gamma function, x > 0.
///
/// Lanczos rational approximation on (0, 12], Stirling series above.
/// Relative error stays below 1e-13 across [0.5, 1e6].
double log_gamma(double x);

/// Parameter quadruple (mu, a, nu, b) of the four-parameter Wright family.
///
/// The raw series has coefficients 1/(Gamma(a + k*mu) * Gamma(b + k*nu)).
/// Library domain: mu, nu >= 0 with mu + nu > 0 (entire function), a, b > 0
/// so every gamma argument stays positive.
struct WrightParams {
  double mu = 1.0;
  double a = 1.0;
  double nu = 1.0;
  double b = 1.0;

  bool is_valid() const;
  // Throws std::domain_error naming the violated invariant.
  void require_valid() const;
};

/// log of alpha_k = Gamma(a)Gamma(b) / (Gamma(a+k*mu) Gamma(b+k*nu)).
/// Exactly 0 for k == 0.
double log_coeff_alpha(const WrightParams& p, int k);

/// alpha_k itself; alpha_0 == 1.0 exactly, never via an exp/log round trip.
double coeff_alpha(const WrightParams& p, int k);

}  // namespace wright
