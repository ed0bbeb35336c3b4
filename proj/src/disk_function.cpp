#include "wright/disk_function.hpp"

#include <cmath>

namespace wright {

namespace {

struct FrozenTail {
  int terms;
  double tail_f, tail_d1, tail_d2;
};

// Freeze enough terms of sum c_k z^{k+offset} that the series and its first
// two term-wise derivatives all carry tails below tol on |z| <= r. The
// coefficient ratio exp(logc(k+1) - logc(k)) is nonincreasing for every
// family built here, and with m = k + offset the derivative series add
// rational factors bounded by (m+1)/(m-1), so a single geometric rate
//   rr = r * coeff_ratio * (m+1)/(m-1)
// dominates all three tails once k >= 2.
template <class LogCoeff>
FrozenTail freeze_terms(double r, double tol, LogCoeff&& logc, int offset) {
  double lc = logc(0);
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    const double lc_next = logc(k + 1);
    if (k >= 2) {
      const double m = k + offset;
      const double rr = r * std::exp(lc_next - lc) * (m + 1.0) / (m - 1.0);
      if (rr < 1.0) {
        const double ck = std::exp(lc);
        const double rm2 = std::pow(r, m - 2.0);
        const double t0 = ck * rm2 * r * r;
        const double t1 = ck * m * rm2 * r;
        const double t2 = ck * m * (m - 1.0) * rm2;
        const double g = rr / (1.0 - rr);
        if (t0 * g <= tol && t1 * g <= tol && t2 * g <= tol)
          return {k + 1, t0 * g, t1 * g, t2 * g};
      }
    }
    lc = lc_next;
  }
  throw truncation_error("freeze_terms: tails not certified within the term cap");
}

}  // namespace

TruncatedSeriesFunction::TruncatedSeriesFunction(std::vector<double> coeffs, int offset,
                                                 double tail_f, double tail_d1, double tail_d2)
    : c_(std::move(coeffs)), offset_(offset), tail_f_(tail_f), tail_d1_(tail_d1), tail_d2_(tail_d2) {}

cplx TruncatedSeriesFunction::value(cplx z) const {
  cplx acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return offset_ == 1 ? acc * z : acc;
}

cplx TruncatedSeriesFunction::deriv(cplx z) const {
  // coefficient of z^j in f' is c_{j+s} * (j+1) with s = 1 - offset
  const int s = 1 - offset_;
  const int n = static_cast<int>(c_.size());
  cplx acc = 0.0;
  for (int j = n - 1 - s; j >= 0; --j) acc = acc * z + c_[j + s] * (j + 1.0);
  return acc;
}

cplx TruncatedSeriesFunction::deriv2(cplx z) const {
  // coefficient of z^j in f'' is c_{j+2-offset} * (j+2)(j+1)
  const int s = 2 - offset_;
  const int n = static_cast<int>(c_.size());
  cplx acc = 0.0;
  for (int j = n - 1 - s; j >= 0; --j) acc = acc * z + c_[j + s] * (j + 2.0) * (j + 1.0);
  return acc;
}

std::unique_ptr<DiskFunction> make_normalized_wright(const WrightParams& p, double r_cap,
                                                     double tol) {
  p.require_valid();
  const auto logc = [&](int k) { return log_coeff_alpha(p, k); };
  const FrozenTail ft = freeze_terms(r_cap, tol, logc, 1);
  std::vector<double> c(ft.terms);
  for (int k = 0; k < ft.terms; ++k) c[k] = coeff_alpha(p, k);
  return std::make_unique<TruncatedSeriesFunction>(std::move(c), 1, ft.tail_f, ft.tail_d1,
                                                   ft.tail_d2);
}

std::unique_ptr<DiskFunction> make_raw_wright(const WrightParams& p, double r_cap, double tol) {
  p.require_valid();
  const auto logc = [&](int k) {
    return -log_gamma(p.a + k * p.mu) - log_gamma(p.b + k * p.nu);
  };
  const FrozenTail ft = freeze_terms(r_cap, tol, logc, 0);
  std::vector<double> c(ft.terms);
  for (int k = 0; k < ft.terms; ++k) c[k] = std::exp(logc(k));
  return std::make_unique<TruncatedSeriesFunction>(std::move(c), 0, ft.tail_f, ft.tail_d1,
                                                   ft.tail_d2);
}

std::unique_ptr<DiskFunction> make_bessel_normalized(double beta, double r_cap, double tol) {
  if (!(beta > -1.0)) throw std::domain_error("make_bessel_normalized: beta must be > -1");
  const WrightParams p{1.0, beta + 1.0, 1.0, 1.0};
  const auto logc = [&](int k) { return log_coeff_alpha(p, k); };
  const FrozenTail ft = freeze_terms(r_cap, tol, logc, 1);
  std::vector<double> c(ft.terms);
  for (int k = 0; k < ft.terms; ++k) c[k] = (k % 2 == 0 ? 1.0 : -1.0) * coeff_alpha(p, k);
  return std::make_unique<TruncatedSeriesFunction>(std::move(c), 1, ft.tail_f, ft.tail_d1,
                                                   ft.tail_d2);
}

std::unique_ptr<DiskFunction> make_partial_sum_function(const WrightParams& p, int N,
                                                        PartialSumKind which) {
  PolyCoeffs pc = partial_sum_coeffs(p, N, which);
  return std::make_unique<TruncatedSeriesFunction>(std::move(pc.coeffs), 0, 0.0, 0.0, 0.0);
}

std::unique_ptr<DiskFunction> make_conclusion_function(const WrightParams& p, double r_cap,
                                                       double tol) {
  return make_normalized_wright(p, r_cap, tol);
}

}  // namespace wright
