#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "wright/gamma.hpp"
#include "wright/series.hpp"

namespace wright {

/// Ascending-power coefficients of a partial-sum polynomial.
struct PolyCoeffs {
  std::vector<double> coeffs;  // c_0 .. c_N, trailing zeros trimmed
  PartialSumKind source = PartialSumKind::RawPartialSum;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Exact coefficients from the normalized-coefficient sequence.
/// Raw:        [1, 1/(G(a+mu)G(b+nu)), ..., 1/(G(a+N mu)G(b+N nu))]
/// Normalized: [0, 1, alpha_1, ..., alpha_{N-1}]
/// QFactor:    [1, alpha_1, ..., alpha_{N-1}]
PolyCoeffs partial_sum_coeffs(const WrightParams& p, int N, PartialSumKind which);

/// Strictly decreasing positive coefficients: every zero then lies outside
/// the closed unit disk.
bool kakeya_applicable(const PolyCoeffs& c);

struct RootsReport {
  std::vector<std::complex<double>> roots;  // nonzero roots, sorted by (modulus, argument)
  int zero_root_multiplicity = 0;           // z = 0 factor reported separately
  double min_modulus = 0.0;                 // over the nonzero roots
  bool kakeya_applicable = false;
  double residual_max = 0.0;  // max |p(root)| / sum |c_k||root|^k (backward error)
  int iterations = 0;
};

/// Thrown when the simultaneous iteration fails to settle; carries what it had.
struct root_convergence_error : std::runtime_error {
  RootsReport partial;
  root_convergence_error(const char* msg, RootsReport r)
      : std::runtime_error(msg), partial(std::move(r)) {}
};

/// All complex roots by Aberth simultaneous iteration. Initial points sit on
/// per-root circles taken from the Newton polygon of the coefficients (the
/// coefficient range of these polynomials spans hundreds of orders of
/// magnitude, so a single starting circle is unusable). Deterministic for a
/// fixed coefficient vector.
RootsReport find_roots(const PolyCoeffs& c);

struct ExteriorReport {
  RootsReport roots;
  bool exterior = false;  // min_modulus > 1
};

/// Zero-location check for the two partial-sum families with decreasing
/// coefficients. Raw requires a = b = 1 and mu, nu > 1; QFactor and
/// Normalized require a, b > 1 and mu, nu >= 1. Violations throw
/// std::domain_error.
ExteriorReport verify_exterior(const WrightParams& p, int N, PartialSumKind which);

}  // namespace wright
