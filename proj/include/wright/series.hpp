#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wright/gamma.hpp"

namespace wright {

using cplx = std::complex<double>;

/// Result of a truncated series evaluation with a certified bound on the
/// absolute value of everything that was discarded.
struct SeriesValue {
  cplx value;
  int terms_used = 0;     // >= 1
  double tail_bound = 0;  // absolute bound on the dropped tail; <= tol on success
};

/// Thrown when the tail cannot be certified below tol within the term cap.
struct truncation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parameters of the two-parameter Wright series sum z^k / (k! Gamma(alpha*k + beta)).
/// The library restricts to alpha >= 0, beta > 0.
struct Wright2Params {
  double alpha = 1.0;
  double beta = 1.0;
  void require_valid() const;
};

/// Upper/lower parameter lists of a Fox-Wright sum
///   sum_k  prod Gamma(a_i + k A_i) / prod Gamma(b_j + k B_j) * x^k / k!.
struct FoxWrightSpec {
  std::vector<std::pair<double, double>> upper;  // (a_i, A_i), A_i > 0
  std::vector<std::pair<double, double>> lower;  // (b_j, B_j), B_j > 0
  // 1 + sum B_j - sum A_i; the series converges for all bounded x when positive.
  double epsilon() const;
  void require_valid() const;  // epsilon > 0 and positive gamma arguments
};

inline constexpr int kMaxSeriesTerms = 500;

SeriesValue eval_wright2(const Wright2Params& p, cplx z, double tol);

// Raw four-parameter series sum z^k / (Gamma(a+k mu) Gamma(b+k nu)).
SeriesValue eval_wright4(const WrightParams& p, cplx z, double tol);

// Normalization z * Gamma(a)Gamma(b) * (raw series) = sum alpha_k z^{k+1};
// value 0 at z = 0 and derivative 1 there.
SeriesValue eval_normalized(const WrightParams& p, cplx z, double tol);

// Term-wise derivative of the normalization: order 1 gives sum (k+1) alpha_k z^k,
// order 2 gives sum_{k>=1} (k+1) k alpha_k z^{k-1}.
SeriesValue eval_normalized_deriv(const WrightParams& p, cplx z, int order, double tol);

// Fox-Wright at real x. Tail certification covers every spec whose upper
// weights are all 1 (which includes each spec used by the criteria module).
SeriesValue eval_fox_wright(const FoxWrightSpec& s, double x, double tol);

// Hypergeometric comparator 1F2: sum (c)_k / ((a)_k (b)_k) x^k / k!, x >= 0.
SeriesValue eval_1F2(double c, double a, double b, double x, double tol);

enum class PartialSumKind { RawPartialSum, NormalizedPartialSum, QFactor };

// Exact Horner evaluation of a partial sum; no tolerance involved.
// Raw: 1 + sum_{k=1..N} z^k/(Gamma(a+k mu)Gamma(b+k nu)).
// Normalized: z + sum_{k=2..N} alpha_{k-1} z^k.
cplx partial_sum(const WrightParams& p, int N, PartialSumKind which, cplx z);

// Normalized Bessel-type series sum (-1)^k alpha_k z^{k+1} with
// parameters (mu=1, a=beta+1, nu=1, b=1); analytic in z, real coefficients.
SeriesValue bessel_normalized(double beta, cplx z, double tol);

// Two-parameter normalization z Gamma(b) sum z^k/(k! Gamma(b + k nu)),
// i.e. the four-parameter normalization at (mu=1, a=1, nu, b).
SeriesValue two_param_normalized(double b, double nu, cplx z, double tol);

}  // namespace wright
