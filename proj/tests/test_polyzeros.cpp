#include <doctest.h>

#include <cmath>
#include <complex>

#include "wright/polyzeros.hpp"

using namespace wright;

TEST_SUITE_BEGIN("polyzeros");

TEST_CASE("partial-sum coefficients") {
  const auto raw = partial_sum_coeffs({1, 1, 1, 1}, 1, PartialSumKind::RawPartialSum);
  REQUIRE(raw.coeffs.size() == 2);
  CHECK(raw.coeffs[0] == 1.0);
  CHECK(raw.coeffs[1] == doctest::Approx(1.0).epsilon(1e-14));

  const auto q = partial_sum_coeffs({1, 2, 1, 2}, 3, PartialSumKind::QFactor);
  REQUIRE(q.coeffs.size() == 3);
  CHECK(q.coeffs[0] == 1.0);
  CHECK(q.coeffs[1] == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(q.coeffs[2] == doctest::Approx(1.0 / 36).epsilon(1e-13));

  const auto n = partial_sum_coeffs({1, 1.5, 2, 2}, 2, PartialSumKind::NormalizedPartialSum);
  REQUIRE(n.coeffs.size() == 3);
  CHECK(n.coeffs[0] == 0.0);
  CHECK(n.coeffs[1] == 1.0);
  CHECK(n.coeffs[2] == doctest::Approx(coeff_alpha({1, 1.5, 2, 2}, 1)));

  CHECK_THROWS_AS(partial_sum_coeffs({1, 1, 1, 1}, 0, PartialSumKind::RawPartialSum),
                  std::domain_error);
}

TEST_CASE("decreasing-coefficient test") {
  CHECK(kakeya_applicable({{1.0, 0.5, 0.1}, PartialSumKind::RawPartialSum}));
  CHECK_FALSE(kakeya_applicable({{1.0, 1.0, 0.5}, PartialSumKind::RawPartialSum}));
  CHECK_FALSE(kakeya_applicable({{1.0, -0.5}, PartialSumKind::RawPartialSum}));
  CHECK(kakeya_applicable(partial_sum_coeffs({1.5, 1, 1.5, 1}, 8, PartialSumKind::RawPartialSum)));
}

TEST_CASE("roots of small polynomials") {
  const auto r1 = find_roots({{-1.0, 0.0, 1.0}, PartialSumKind::RawPartialSum});
  REQUIRE(r1.roots.size() == 2);
  CHECK(r1.min_modulus == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(r1.roots[0] + 1.0) * std::abs(r1.roots[0] - 1.0) < 1e-10);

  const auto r2 = find_roots({{1.0, 1.0}, PartialSumKind::RawPartialSum});
  REQUIRE(r2.roots.size() == 1);
  CHECK(std::abs(r2.roots[0] - std::complex<double>(-1.0, 0.0)) < 1e-12);

  // z factor of the normalized partial sum is reported separately
  const auto rn = find_roots(partial_sum_coeffs({1, 2, 1, 2}, 6, PartialSumKind::NormalizedPartialSum));
  CHECK(rn.zero_root_multiplicity == 1);
  CHECK(rn.roots.size() == 5);
  CHECK(rn.min_modulus > 1.0);

  // the N = 1 normalized sum is just z
  const auto r0 = find_roots(partial_sum_coeffs({1, 2, 1, 2}, 1, PartialSumKind::NormalizedPartialSum));
  CHECK(r0.zero_root_multiplicity == 1);
  CHECK(r0.roots.empty());
  CHECK_THROWS_AS(find_roots({{3.0}, PartialSumKind::RawPartialSum}), std::domain_error);
}

TEST_CASE("exterior verification families") {
  const auto raw = verify_exterior({2, 1, 2, 1}, 10, PartialSumKind::RawPartialSum);
  CHECK(raw.exterior);
  CHECK(raw.roots.kakeya_applicable);

  const auto q = verify_exterior({1, 1.5, 1, 1.5}, 10, PartialSumKind::QFactor);
  CHECK(q.exterior);

  CHECK_THROWS_AS(verify_exterior({1, 0.5, 1, 0.5}, 10, PartialSumKind::QFactor),
                  std::domain_error);
  CHECK_THROWS_AS(verify_exterior({2, 2, 2, 1}, 10, PartialSumKind::RawPartialSum),
                  std::domain_error);
  CHECK_THROWS_AS(verify_exterior({1, 1, 1, 1}, 10, PartialSumKind::RawPartialSum),
                  std::domain_error);
}

TEST_CASE("root sets satisfy the coefficient identities") {
  for (double mn : {1.2, 1.5, 2.0})
    for (int N : {4, 8, 16, 24}) {
      const auto pc = partial_sum_coeffs({mn, 1, mn, 1}, N, PartialSumKind::RawPartialSum);
      const auto rep = find_roots(pc);
      CHECK(rep.residual_max <= 1e-9);
      std::complex<long double> sum = 0.0L, prod = 1.0L;
      for (const auto& z : rep.roots) {
        sum += std::complex<long double>(z);
        prod *= std::complex<long double>(z);
      }
      const int n = pc.degree();
      const long double want_sum = -(long double)pc.coeffs[n - 1] / pc.coeffs[n];
      const long double want_prod = ((n % 2) ? -1.0L : 1.0L) * pc.coeffs[0] / pc.coeffs[n];
      CHECK(std::abs(sum - want_sum) <= 1e-8 * std::abs(want_sum));
      CHECK(std::abs(prod - want_prod) <= 1e-8 * std::abs(want_prod));
    }
}

TEST_CASE("decreasing coefficients imply exterior roots") {
  for (double mn : {1.2, 2.0})
    for (int N : {4, 8, 16}) {
      const auto pc = partial_sum_coeffs({mn, 1, mn, 1}, N, PartialSumKind::RawPartialSum);
      if (!kakeya_applicable(pc)) continue;
      CHECK(find_roots(pc).min_modulus >= 1.0 - 1e-9);
    }
}

TEST_CASE("min modulus stays exterior from degree 2 to 24") {
  for (int N = 2; N <= 24; ++N) {
    CHECK(verify_exterior({1.5, 1, 1.5, 1}, N, PartialSumKind::RawPartialSum).exterior);
    if (N >= 2) CHECK(verify_exterior({1, 2, 1, 2}, N, PartialSumKind::QFactor).exterior);
  }
}

TEST_CASE("root ordering is deterministic") {
  const auto pc = partial_sum_coeffs({1.5, 1, 1.5, 1}, 12, PartialSumKind::RawPartialSum);
  const auto a = find_roots(pc);
  const auto b = find_roots(pc);
  REQUIRE(a.roots.size() == b.roots.size());
  for (std::size_t i = 0; i < a.roots.size(); ++i) {
    CHECK(a.roots[i].real() == b.roots[i].real());
    CHECK(a.roots[i].imag() == b.roots[i].imag());
  }
}

TEST_SUITE_END();
