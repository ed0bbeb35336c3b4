#include "wright/polyzeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace wright {

namespace {

constexpr double kCorrectionTol = 1e-12;
constexpr int kMaxIterations = 200;

// Per-root starting radii from the upper convex hull of (k, log|c_k|).
// Roots associated with a hull segment of horizontal span m get radius
// |c_k1 / c_k2|^(1/m); this tracks the actual root magnitudes even when the
// coefficients decay by hundreds of orders of magnitude.
std::vector<double> starting_radii(const std::vector<double>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<std::pair<int, double>> pts;
  for (int k = 0; k <= n; ++k)
    if (c[k] != 0.0) pts.emplace_back(k, std::log(std::abs(c[k])));
  std::vector<std::pair<int, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& [x1, y1] = hull[hull.size() - 2];
      const auto& [x2, y2] = hull[hull.size() - 1];
      if ((y2 - y1) * (p.first - x1) <= (p.second - y1) * (x2 - x1))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  std::vector<double> radii;
  radii.reserve(n);
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto& [k1, l1] = hull[i];
    const auto& [k2, l2] = hull[i + 1];
    const double r = std::exp((l1 - l2) / (k2 - k1));
    for (int m = 0; m < k2 - k1; ++m) radii.push_back(r);
  }
  return radii;
}

// Horner value plus sum |c_k||z|^k, the natural backward-error scale at z.
std::pair<std::complex<double>, double> eval_with_scale(const std::vector<double>& c,
                                                        std::complex<double> z) {
  std::complex<double> p = 0.0;
  double s = 0.0;
  const double az = std::abs(z);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    p = p * z + *it;
    s = s * az + std::abs(*it);
  }
  return {p, s};
}

}  // namespace

PolyCoeffs partial_sum_coeffs(const WrightParams& p, int N, PartialSumKind which) {
  p.require_valid();
  if (N < 1) throw std::domain_error("partial_sum_coeffs: N must be >= 1");
  PolyCoeffs out;
  out.source = which;
  switch (which) {
    case PartialSumKind::RawPartialSum:
      out.coeffs.push_back(1.0);
      for (int k = 1; k <= N; ++k)
        out.coeffs.push_back(std::exp(-log_gamma(p.a + k * p.mu) - log_gamma(p.b + k * p.nu)));
      break;
    case PartialSumKind::NormalizedPartialSum:
      out.coeffs.push_back(0.0);
      out.coeffs.push_back(1.0);
      for (int k = 2; k <= N; ++k) out.coeffs.push_back(coeff_alpha(p, k - 1));
      break;
    case PartialSumKind::QFactor:
      out.coeffs.push_back(1.0);
      for (int k = 2; k <= N; ++k) out.coeffs.push_back(coeff_alpha(p, k - 1));
      break;
  }
  while (out.coeffs.size() > 1 && out.coeffs.back() == 0.0) out.coeffs.pop_back();
  return out;
}

bool kakeya_applicable(const PolyCoeffs& c) {
  if (c.coeffs.empty()) return false;
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
    if (!(c.coeffs[k] > 0.0)) return false;
    if (k + 1 < c.coeffs.size() && !(c.coeffs[k] > c.coeffs[k + 1])) return false;
  }
  return true;
}

RootsReport find_roots(const PolyCoeffs& input) {
  RootsReport rep;
  rep.kakeya_applicable = kakeya_applicable(input);

  // Factor out z^m before iterating.
  std::vector<double> c = input.coeffs;
  std::size_t lead_zeros = 0;
  while (lead_zeros < c.size() && c[lead_zeros] == 0.0) ++lead_zeros;
  rep.zero_root_multiplicity = static_cast<int>(lead_zeros);
  c.erase(c.begin(), c.begin() + lead_zeros);
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) {
    if (rep.zero_root_multiplicity == 0)
      throw std::domain_error("find_roots: degree must be >= 1");
    rep.min_modulus = std::numeric_limits<double>::infinity();
    return rep;  // only the z^m factor: no nonzero roots to locate
  }

  std::vector<double> dc(n);
  for (int k = 1; k <= n; ++k) dc[k - 1] = c[k] * k;

  const std::vector<double> radii = starting_radii(c);
  std::vector<std::complex<double>> z(n);
  for (int i = 0; i < n; ++i) {
    const double ang = 2.0 * std::numbers::pi * (i + 0.5) / n + 0.7;
    z[i] = radii[i] * std::complex<double>(std::cos(ang), std::sin(ang));
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::vector<bool> settled(n, false);
  int it = 1;
  bool converged = false;
  for (; it <= kMaxIterations; ++it) {
    bool all_quiet = true;
    for (int i = 0; i < n; ++i) {
      if (settled[i]) continue;
      const auto [pv, scale] = eval_with_scale(c, z[i]);
      if (std::abs(pv) <= 8.0 * eps * scale) {
        settled[i] = true;  // backward-error converged; further steps are noise
        continue;
      }
      std::complex<double> dp = 0.0;
      for (auto itc = dc.rbegin(); itc != dc.rend(); ++itc) dp = dp * z[i] + *itc;
      const std::complex<double> w = pv / dp;
      std::complex<double> s = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (z[i] - z[j]);
      const std::complex<double> corr = w / (1.0 - w * s);
      z[i] -= corr;
      if (std::abs(corr) > kCorrectionTol * (1.0 + std::abs(z[i]))) all_quiet = false;
    }
    if (all_quiet && it > 1) {
      converged = true;
      break;
    }
  }

  std::sort(z.begin(), z.end(), [](const std::complex<double>& l, const std::complex<double>& r) {
    const double ml = std::abs(l), mr = std::abs(r);
    if (ml != mr) return ml < mr;
    return std::arg(l) < std::arg(r);
  });
  rep.roots = z;
  rep.min_modulus = std::abs(z.front());
  rep.iterations = std::min(it, kMaxIterations);
  double worst = 0.0;
  for (const auto& root : z) {
    const auto [pv, scale] = eval_with_scale(c, root);
    worst = std::max(worst, std::abs(pv) / scale);
  }
  rep.residual_max = worst;

  if (!converged) throw root_convergence_error("find_roots: no convergence in 200 iterations", rep);
  return rep;
}

ExteriorReport verify_exterior(const WrightParams& p, int N, PartialSumKind which) {
  if (which == PartialSumKind::RawPartialSum) {
    if (p.a != 1.0 || p.b != 1.0)
      throw std::domain_error("verify_exterior: raw partial sums require a = b = 1");
    if (!(p.mu > 1.0 && p.nu > 1.0))
      throw std::domain_error("verify_exterior: raw partial sums require mu, nu > 1");
  } else {
    if (!(p.a > 1.0 && p.b > 1.0))
      throw std::domain_error("verify_exterior: this family requires a, b > 1");
    if (!(p.mu >= 1.0 && p.nu >= 1.0))
      throw std::domain_error("verify_exterior: this family requires mu, nu >= 1");
  }
  ExteriorReport out;
  out.roots = find_roots(partial_sum_coeffs(p, N, which));
  out.exterior = out.roots.min_modulus > 1.0;
  return out;
}

}  // namespace wright
