#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracle_ref.hpp"
#include "wright/series.hpp"

using namespace wright;
using refsum::cplxl;

namespace {

cplx to_d(cplxl z) { return {double(z.real()), double(z.imag())}; }

double rel_err(cplx got, cplx want) {
  const double scale = std::max(std::abs(want), 1e-30);
  return std::abs(got - want) / scale;
}

}  // namespace

TEST_SUITE_BEGIN("series");

TEST_CASE("two-parameter series pinned values") {
  CHECK(eval_wright2({1, 1}, 0.0, 1e-12).value == cplx(1.0));
  // alpha = beta = 1 at z = 1 sums 1/(k!)^2
  const auto v = eval_wright2({1, 1}, 1.0, 1e-13);
  CHECK(rel_err(v.value, to_d(refsum::wright2(1, 1, 1.0L, 60))) < 1e-13);
  CHECK(v.tail_bound <= 1e-13);
  // alpha = 0 collapses to the exponential series
  CHECK(rel_err(eval_wright2({0, 1}, 0.5, 1e-13).value, std::exp(cplx(0.5))) < 1e-13);
  CHECK_THROWS_AS(eval_wright2({-0.5, 1}, 0.1, 1e-12), std::domain_error);
  CHECK_THROWS_AS(eval_wright2({1, 0}, 0.1, 1e-12), std::domain_error);
}

TEST_CASE("uncertifiable tails raise a truncation error") {
  // with mu + nu tiny the coefficients barely decay, so the geometric bound
  // near the boundary cannot reach tolerance within the term cap
  CHECK_THROWS_AS(eval_wright4({0.001, 1, 0.001, 1}, 0.99, 1e-12), truncation_error);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(eval_normalized({1, 1, 1, 1}, cplx(inf, 0.0), 1e-12), std::domain_error);
}

TEST_CASE("raw four-parameter series") {
  CHECK(eval_wright4({1, 1, 1, 1}, 0.0, 1e-12).value == cplx(1.0));
  const auto v = eval_wright4({1, 1, 1, 2}, 1.0, 1e-13);
  CHECK(rel_err(v.value, to_d(refsum::raw_wright(1, 1, 1, 2, 1.0L, 60))) < 1e-13);
  // Bessel-type relation at (mu=1, a=2, nu=1, b=1):
  // G(2) 0.25^{1/2} J_1(2 sqrt(0.25)) = 0.25 * raw(-0.25)
  const auto raw = eval_wright4({1, 2, 1, 1}, -0.25, 1e-14);
  const cplxl rhs = std::sqrt(0.25L) * refsum::bessel_j(1.0L, 2.0L * std::sqrt(0.25L));
  CHECK(rel_err(0.25 * raw.value, to_d(rhs)) < 1e-13);
}

TEST_CASE("normalized series and derivatives") {
  CHECK(eval_normalized({2, 1.5, 1, 1}, 0.0, 1e-12).value == cplx(0.0));
  const auto v = eval_normalized({1, 1, 1, 1}, 0.5, 1e-13);
  CHECK(rel_err(v.value, to_d(refsum::normalized_wright(1, 1, 1, 1, 0.5L, 60))) < 1e-13);
  CHECK(eval_normalized_deriv({1, 1, 1, 1}, 0.0, 1, 1e-12).value == cplx(1.0));
  const auto d2 = eval_normalized_deriv({1, 2, 1.5, 3}, 0.0, 2, 1e-12);
  CHECK(d2.value == cplx(2.0 * coeff_alpha({1, 2, 1.5, 3}, 1)));
  CHECK_THROWS_AS(eval_normalized_deriv({1, 1, 1, 1}, 0.1, 3, 1e-12), std::domain_error);

  // order-1 derivative against a central difference of the function itself
  const WrightParams p{1, 1, 1, 1};
  const double h = 1e-5;
  const cplx z = 0.3;
  const cplx fd =
      (eval_normalized(p, z + h, 1e-15).value - eval_normalized(p, z - h, 1e-15).value) / (2 * h);
  CHECK(rel_err(eval_normalized_deriv(p, z, 1, 1e-14).value, fd) < 1e-8);
}

TEST_CASE("fox-wright evaluation") {
  FoxWrightSpec exp_spec{{{1, 1}}, {{1, 1}}};
  CHECK(rel_err(eval_fox_wright(exp_spec, 1.0, 1e-13).value, cplx(std::exp(1.0))) < 1e-13);
  CHECK(exp_spec.epsilon() == doctest::Approx(1.0));

  // the ratio-bound spec at mu=nu=a=b=1: sum (k+1)/G(k+2)^2
  FoxWrightSpec s{{{2, 1}}, {{2, 1}, {2, 1}}};
  const auto v = eval_fox_wright(s, 1.0, 1e-13);
  CHECK(rel_err(v.value, double(refsum::fox_wright({{2, 1}}, {{2, 1}, {2, 1}}, 1.0L))) < 1e-13);

  // x = 0 returns the k = 0 moment
  FoxWrightSpec s2{{{1.7, 1}}, {{2.3, 0.8}, {1.1, 1.4}}};
  const double psi0 =
      std::exp(log_gamma(1.7) - log_gamma(2.3) - log_gamma(1.1));
  CHECK(eval_fox_wright(s2, 0.0, 1e-12).value.real() == doctest::Approx(psi0).epsilon(1e-13));

  FoxWrightSpec bad{{{1, 2}}, {{1, 0.5}}};
  CHECK_THROWS_AS(eval_fox_wright(bad, 1.0, 1e-12), std::domain_error);  // epsilon < 0

  // convergent but outside the certifiable shape (non-unit upper weight)
  FoxWrightSpec uncertified{{{1, 2}}, {{1, 1}, {1, 1.5}}};
  CHECK_THROWS_AS(eval_fox_wright(uncertified, 1.0, 1e-12), truncation_error);
}

TEST_CASE("hypergeometric comparator") {
  CHECK(eval_1F2(1, 1.3, 2.4, 0.0, 1e-12).value == cplx(1.0));
  // the unit numerator cancels one denominator factor: sum x^k/(k!)^2
  refsum::Neumaier i0;
  for (int k = 0; k < 40; ++k) i0.add(expl(-2 * lgammal(k + 1.0L)));
  CHECK(rel_err(eval_1F2(1, 1, 1, 1.0, 1e-13).value, cplx(double(i0.total()))) < 1e-13);
  CHECK(rel_err(eval_1F2(1, 2, 3, 0.5, 1e-13).value,
                cplx(double(refsum::hyper_1f2(1, 2, 3, 0.5L, 30)))) < 1e-13);
  CHECK_THROWS_AS(eval_1F2(1, 2, 3, -0.5, 1e-12), std::domain_error);
}

TEST_CASE("partial sums") {
  CHECK(partial_sum({1, 1, 1, 1}, 1, PartialSumKind::RawPartialSum, 0.0) == cplx(1.0));
  // z + alpha_1 z^2 at z = 1 with unit parameters
  CHECK(partial_sum({1, 1, 1, 1}, 2, PartialSumKind::NormalizedPartialSum, 1.0) == cplx(2.0));

  // truncation against the full series at a = b = 1
  const WrightParams p{1.3, 1, 1.3, 1};
  const cplx full = eval_wright4(p, 0.1, 1e-15).value;
  const cplx part = partial_sum(p, 5, PartialSumKind::RawPartialSum, 0.1);
  const double first_omitted = std::pow(0.1, 6) * coeff_alpha(p, 6);
  CHECK(std::abs(full - part) <= 2.0 * first_omitted);
}

TEST_CASE("normalized Bessel-type series") {
  CHECK(bessel_normalized(1.5, 0.0, 1e-12).value == cplx(0.0));
  // identity against an independent Bessel power series
  const cplxl rhs = tgammal(2.5L) * std::pow(cplxl(0.25L), cplxl(1.0L - 0.75L)) *
                    refsum::bessel_j(1.5L, 2.0L * std::sqrt(cplxl(0.25L)));
  CHECK(rel_err(bessel_normalized(1.5, 0.25, 1e-14).value, to_d(rhs)) < 1e-12);

  refsum::NeumaierC acc;
  for (int k = 0; k < 40; ++k)
    acc.add((k % 2 ? -1.0L : 1.0L) * expl(-2 * lgammal(k + 1.0L)) * powl(0.5L, k + 1.0L));
  CHECK(rel_err(bessel_normalized(0.0, 0.5, 1e-14).value, to_d(acc.total())) < 1e-13);
  CHECK_THROWS_AS(bessel_normalized(-1.0, 0.1, 1e-12), std::domain_error);
}

TEST_CASE("two-parameter normalization") {
  CHECK(two_param_normalized(2, 1, 0.0, 1e-12).value == cplx(0.0));
  CHECK(rel_err(two_param_normalized(2, 1, 0.5, 1e-13).value,
                to_d(refsum::normalized_wright(1, 1, 1, 2, 0.5L, 60))) < 1e-13);
  CHECK(rel_err(two_param_normalized(4, 0.8, 0.3, 1e-13).value,
                to_d(refsum::normalized_wright(1, 1, 0.8L, 4, 0.3L, 60))) < 1e-13);
  CHECK_THROWS_AS(two_param_normalized(0.0, 1, 0.1, 1e-12), std::domain_error);
}

TEST_CASE("tail bounds are honest on random samples") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> up(1.0, 3.0);
  std::uniform_real_distribution<double> ur(0.0, 0.999);
  std::uniform_real_distribution<double> ut(0.0, 2.0 * M_PI);
  for (int i = 0; i < 1000; ++i) {
    const WrightParams p{up(rng), up(rng), up(rng), up(rng)};
    const cplx z = std::polar(ur(rng), ut(rng));
    const double tol = (i % 3 == 0) ? 1e-6 : 1e-11;
    const auto v = eval_normalized(p, z, tol);
    const cplx ref = to_d(refsum::normalized_wright(p.mu, p.a, p.nu, p.b, cplxl(z.real(), z.imag())));
    CHECK(v.tail_bound <= tol);
    CHECK(std::abs(v.value - ref) <= v.tail_bound + 1e-13 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("hypergeometric domination of the normalized series") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> up(1.0, 3.0);
  std::uniform_real_distribution<double> ur(0.0, 0.999);
  std::uniform_real_distribution<double> ut(0.0, 2.0 * M_PI);
  for (int i = 0; i < 400; ++i) {
    const WrightParams p{up(rng), up(rng), up(rng), up(rng)};
    const cplx z = std::polar(ur(rng), ut(rng));
    const double az = std::abs(z);
    const double comparator = eval_1F2(1, p.a, p.b, az, 1e-13).value.real();
    CHECK(std::abs(eval_normalized(p, z, 1e-13).value) <= az * comparator + 1e-12);
    // raw-series form: dividing by z Gamma(a) Gamma(b) removes the |z| factor
    const double gg = std::exp(-log_gamma(p.a) - log_gamma(p.b));
    CHECK(std::abs(eval_wright4(p, z, 1e-13).value) <= gg * comparator + 1e-12);
  }
}

TEST_CASE("analytic derivatives match central differences") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> up(1.0, 3.0);
  std::uniform_real_distribution<double> ur(0.0, 0.9);
  std::uniform_real_distribution<double> ut(0.0, 2.0 * M_PI);
  const double h = 1e-5;
  for (int i = 0; i < 60; ++i) {
    const WrightParams p{up(rng), up(rng), up(rng), up(rng)};
    const cplx z = std::polar(ur(rng), ut(rng));
    const cplx d1 = eval_normalized_deriv(p, z, 1, 1e-14).value;
    const cplx fd1 =
        (eval_normalized(p, z + h, 1e-15).value - eval_normalized(p, z - h, 1e-15).value) /
        (2 * h);
    CHECK(rel_err(d1, fd1) < 1e-7);
    const cplx d2 = eval_normalized_deriv(p, z, 2, 1e-14).value;
    const cplx fd2 = (eval_normalized_deriv(p, z + h, 1, 1e-15).value -
                      eval_normalized_deriv(p, z - h, 1, 1e-15).value) /
                     (2 * h);
    CHECK(rel_err(d2, fd2) < 1e-7);
  }
}

TEST_CASE("conjugate symmetry") {
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> up(1.0, 3.0);
  std::uniform_real_distribution<double> ur(0.0, 0.999);
  std::uniform_real_distribution<double> ut(0.0, 2.0 * M_PI);
  for (int i = 0; i < 100; ++i) {
    const WrightParams p{up(rng), up(rng), up(rng), up(rng)};
    const cplx z = std::polar(ur(rng), ut(rng));
    const cplx a = eval_normalized(p, std::conj(z), 1e-13).value;
    const cplx b = std::conj(eval_normalized(p, z, 1e-13).value);
    CHECK(std::abs(a - b) <= 1e-14 * std::max(1.0, std::abs(b)));
  }
}

TEST_SUITE_END();
