#pragma once

#include <memory>
#include <vector>

#include "wright/polyzeros.hpp"
#include "wright/series.hpp"

namespace wright {

/// An analytic function on a disk |z| <= r_cap with value and derivatives,
/// plus certified uniform bounds on its evaluation error over that disk
/// (zero for closed forms, the frozen series tail for truncated series).
class DiskFunction {
 public:
  virtual ~DiskFunction() = default;
  virtual cplx value(cplx z) const = 0;
  virtual cplx deriv(cplx z) const = 0;
  virtual cplx deriv2(cplx z) const = 0;
  virtual double value_err() const { return 0.0; }
  virtual double deriv_err() const { return 0.0; }
  virtual double deriv2_err() const { return 0.0; }
};

/// Fixed-coefficient power series sum c_k z^{k + offset}, Horner-evaluated.
/// Coefficients are frozen at construction so that grid sweeps pay only a
/// polynomial evaluation per point.
class TruncatedSeriesFunction : public DiskFunction {
 public:
  TruncatedSeriesFunction(std::vector<double> coeffs, int offset, double tail_f, double tail_d1,
                          double tail_d2);

  cplx value(cplx z) const override;
  cplx deriv(cplx z) const override;
  cplx deriv2(cplx z) const override;
  double value_err() const override { return tail_f_; }
  double deriv_err() const override { return tail_d1_; }
  double deriv2_err() const override { return tail_d2_; }

 private:
  std::vector<double> c_;  // coefficient of z^{k+offset}
  int offset_;
  double tail_f_, tail_d1_, tail_d2_;
};

/// Normalized Wright map z + sum alpha_k z^{k+1}, truncated so that the
/// function and both derivatives carry tails below tol on |z| <= r_cap.
std::unique_ptr<DiskFunction> make_normalized_wright(const WrightParams& p, double r_cap,
                                                     double tol = 1e-12);

/// Raw map sum z^k / (Gamma(a+k mu) Gamma(b+k nu)) truncated the same way.
std::unique_ptr<DiskFunction> make_raw_wright(const WrightParams& p, double r_cap,
                                              double tol = 1e-12);

/// Alternating-sign normalized Bessel-type map (parameters mu=1, a=beta+1,
/// nu=1, b=1 with signs folded into the coefficients).
std::unique_ptr<DiskFunction> make_bessel_normalized(double beta, double r_cap,
                                                     double tol = 1e-12);

/// Exact polynomial map from partial-sum coefficients.
std::unique_ptr<DiskFunction> make_partial_sum_function(const WrightParams& p, int N,
                                                        PartialSumKind which);

/// The map a criterion conclusion talks about (normalized Wright family).
std::unique_ptr<DiskFunction> make_conclusion_function(const WrightParams& p, double r_cap,
                                                       double tol = 1e-12);

}  // namespace wright
