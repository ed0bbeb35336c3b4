#include "wright/series.hpp"

#include <algorithm>
#include <cmath>

#include "wright/polyzeros.hpp"

namespace wright {

namespace {

// Shared summation loop for series whose term-magnitude ratio t_{k+1}/t_k is
// nonincreasing in k. For every family here the coefficient ratio is a product
// of reciprocal gamma-step factors (decreasing, since digamma is increasing)
// and rational factors (j+c2)/(j+c1) with c2 >= c1 (also decreasing), so the
// current ratio dominates the whole tail: after summing through term k,
//   tail <= t_k * r/(1-r)  with  r = t_{k+1}/t_k < 1.
template <class LogCoeff>
SeriesValue sum_monotone_ratio_series(cplx z, double tol, LogCoeff&& logc) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::domain_error("series evaluation: z must have finite components");
  const double az = std::abs(z);
  cplx acc = 0.0;
  cplx zp = 1.0;
  double azk = 1.0;
  double lc = logc(0);
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    const double ck = std::exp(lc);
    acc += ck * zp;
    const double tk = ck * azk;
    const double lc_next = logc(k + 1);
    const double r = az * std::exp(lc_next - lc);
    if (r < 1.0) {
      const double tail = tk * (r / (1.0 - r));
      if (tail <= tol) return {acc, k + 1, tail};
    }
    lc = lc_next;
    zp *= z;
    azk *= az;
  }
  throw truncation_error("series tail not certified within the term cap");
}

}  // namespace

void Wright2Params::require_valid() const {
  if (!(std::isfinite(alpha) && std::isfinite(beta)))
    throw std::domain_error("Wright2Params: parameters must be finite");
  if (alpha < 0.0) throw std::domain_error("Wright2Params: alpha must be >= 0");
  if (beta <= 0.0) throw std::domain_error("Wright2Params: beta must be > 0");
}

double FoxWrightSpec::epsilon() const {
  double e = 1.0;
  for (const auto& [a, A] : upper) e -= A;
  for (const auto& [b, B] : lower) e += B;
  return e;
}

void FoxWrightSpec::require_valid() const {
  for (const auto& [a, A] : upper)
    if (!(A > 0.0) || !(a > 0.0))
      throw std::domain_error("FoxWrightSpec: upper pairs need a_i > 0 and A_i > 0");
  for (const auto& [b, B] : lower)
    if (!(B > 0.0) || !(b > 0.0))
      throw std::domain_error("FoxWrightSpec: lower pairs need b_j > 0 and B_j > 0");
  if (!(epsilon() > 0.0))
    throw std::domain_error("FoxWrightSpec: convergence index 1 + sum B - sum A must be > 0");
}

SeriesValue eval_wright2(const Wright2Params& p, cplx z, double tol) {
  p.require_valid();
  if (!(tol > 0.0)) throw std::domain_error("eval_wright2: tol must be > 0");
  return sum_monotone_ratio_series(z, tol, [&](int k) {
    return -log_gamma(double(k) + 1.0) - log_gamma(p.alpha * k + p.beta);
  });
}

SeriesValue eval_wright4(const WrightParams& p, cplx z, double tol) {
  p.require_valid();
  if (!(tol > 0.0)) throw std::domain_error("eval_wright4: tol must be > 0");
  return sum_monotone_ratio_series(z, tol, [&](int k) {
    return -log_gamma(p.a + k * p.mu) - log_gamma(p.b + k * p.nu);
  });
}

SeriesValue eval_normalized(const WrightParams& p, cplx z, double tol) {
  p.require_valid();
  if (!(tol > 0.0)) throw std::domain_error("eval_normalized: tol must be > 0");
  SeriesValue inner =
      sum_monotone_ratio_series(z, tol, [&](int k) { return log_coeff_alpha(p, k); });
  inner.value *= z;
  inner.tail_bound *= std::abs(z);
  return inner;
}

SeriesValue eval_normalized_deriv(const WrightParams& p, cplx z, int order, double tol) {
  p.require_valid();
  if (!(tol > 0.0)) throw std::domain_error("eval_normalized_deriv: tol must be > 0");
  if (order == 1) {
    return sum_monotone_ratio_series(
        z, tol, [&](int k) { return std::log(k + 1.0) + log_coeff_alpha(p, k); });
  }
  if (order == 2) {
    // sum_{k>=1} (k+1) k alpha_k z^{k-1}, reindexed from zero.
    return sum_monotone_ratio_series(z, tol, [&](int j) {
      return std::log((j + 2.0) * (j + 1.0)) + log_coeff_alpha(p, j + 1);
    });
  }
  throw std::domain_error("eval_normalized_deriv: order must be 1 or 2");
}

SeriesValue eval_fox_wright(const FoxWrightSpec& s, double x, double tol) {
  s.require_valid();
  if (!std::isfinite(x)) throw std::domain_error("eval_fox_wright: x must be finite");
  if (!(tol > 0.0)) throw std::domain_error("eval_fox_wright: tol must be > 0");

  // Split factors of the term ratio t_{k+1}/t_k for the factored tail bound.
  // Upper pairs with unit weight contribute the linear factor (a_i + k); the
  // k! and unit-weight lower pairs contribute linear denominators; remaining
  // lower pairs contribute reciprocal gamma steps, which always decrease.
  std::vector<double> lin_num;
  std::vector<double> lin_den{1.0};  // from k!
  std::vector<std::pair<double, double>> gamma_den;
  for (const auto& [a, A] : s.upper) {
    if (A == 1.0)
      lin_num.push_back(a);
    else
      throw truncation_error("eval_fox_wright: tail certification requires unit upper weights");
  }
  for (const auto& [b, B] : s.lower) {
    if (B == 1.0)
      lin_den.push_back(b);
    else
      gamma_den.emplace_back(b, B);
  }
  if (lin_num.size() > lin_den.size())
    throw truncation_error("eval_fox_wright: more upper than lower linear factors");
  // Pair largest numerator base with largest denominator base; each pair's
  // future supremum is max(value_now, 1). Unpaired denominators only shrink.
  std::sort(lin_num.rbegin(), lin_num.rend());
  std::sort(lin_den.rbegin(), lin_den.rend());

  const double ax = std::abs(x);
  auto log_psi = [&](int k) {
    double lp = 0.0;
    for (const auto& [a, A] : s.upper) lp += log_gamma(a + k * A);
    for (const auto& [b, B] : s.lower) lp -= log_gamma(b + k * B);
    return lp;
  };
  auto ratio_sup = [&](int k) {
    double r = ax;
    std::size_t i = 0;
    for (; i < lin_num.size(); ++i) r *= std::max((lin_num[i] + k) / (lin_den[i] + k), 1.0);
    for (; i < lin_den.size(); ++i) r /= (lin_den[i] + k);
    for (const auto& [b, B] : gamma_den)
      r *= std::exp(log_gamma(b + k * B) - log_gamma(b + (k + 1.0) * B));
    return r;
  };

  cplx acc = 0.0;
  double xp = 1.0;
  double axk = 1.0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    const double ck = std::exp(log_psi(k) - log_gamma(k + 1.0));
    acc += ck * xp;
    const double tk = ck * axk;
    const double r = ratio_sup(k);
    if (r < 1.0) {
      const double tail = tk * (r / (1.0 - r));
      if (tail <= tol) return {acc, k + 1, tail};
    }
    xp *= x;
    axk *= ax;
  }
  throw truncation_error("eval_fox_wright: tail not certified within the term cap");
}

SeriesValue eval_1F2(double c, double a, double b, double x, double tol) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0))
    throw std::domain_error("eval_1F2: parameters must be positive");
  if (!(x >= 0.0) || !std::isfinite(x)) throw std::domain_error("eval_1F2: x must be >= 0");
  if (!(tol > 0.0)) throw std::domain_error("eval_1F2: tol must be > 0");

  double term = 1.0;
  double acc = 0.0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    acc += term;
    // sup over the future of the term ratio: (c+j)/(1+j) is monotone toward
    // max(current, 1), the remaining factors only decrease.
    const double r = x * std::max((c + k) / (1.0 + k), 1.0) / ((a + k) * (b + k));
    if (r < 1.0) {
      const double tail = term * (r / (1.0 - r));
      if (tail <= tol) return {cplx(acc, 0.0), k + 1, tail};
    }
    term *= x * (c + k) / ((a + k) * (b + k) * (1.0 + k));
  }
  throw truncation_error("eval_1F2: tail not certified within the term cap");
}

cplx partial_sum(const WrightParams& p, int N, PartialSumKind which, cplx z) {
  const PolyCoeffs pc = partial_sum_coeffs(p, N, which);
  cplx acc = 0.0;
  for (auto it = pc.coeffs.rbegin(); it != pc.coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

SeriesValue bessel_normalized(double beta, cplx z, double tol) {
  if (!(beta > -1.0)) throw std::domain_error("bessel_normalized: beta must be > -1");
  const WrightParams p{1.0, beta + 1.0, 1.0, 1.0};
  SeriesValue s = eval_normalized(p, -z, tol);
  s.value = -s.value;
  return s;
}

SeriesValue two_param_normalized(double b, double nu, cplx z, double tol) {
  if (!(b > 0.0)) throw std::domain_error("two_param_normalized: b must be > 0");
  if (!(nu > 0.0)) throw std::domain_error("two_param_normalized: nu must be > 0");
  return eval_normalized(WrightParams{1.0, 1.0, nu, b}, z, tol);
}

}  // namespace wright
