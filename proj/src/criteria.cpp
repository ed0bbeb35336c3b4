#include "wright/criteria.hpp"

#include <cmath>
#include <limits>

namespace wright {

namespace {

constexpr double kE = 2.718281828459045235360287471352662498;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
const std::string kSufficiencyNote =
    "sufficient condition only; NotEstablished does not assert the property fails";

bool gamma_args_ok(const WrightParams& p) {
  // Every argument a + k mu, b + k nu for k <= 3 must be positive.
  return p.a > 0.0 && p.b > 0.0 && p.a + 3.0 * p.mu > 0.0 && p.b + 3.0 * p.nu > 0.0;
}

// exp(sum of log-gammas with signs); NaN when any argument is out of domain.
struct GammaRatio {
  double log = 0.0;
  bool ok = true;
  GammaRatio& mul(double arg) {
    if (arg > 0.0 && ok)
      log += log_gamma(arg);
    else
      ok = false;
    return *this;
  }
  GammaRatio& div(double arg) {
    if (arg > 0.0 && ok)
      log -= log_gamma(arg);
    else
      ok = false;
    return *this;
  }
  GammaRatio& scale(double s) {
    if (ok) log += std::log(s);
    return *this;
  }
  double value() const { return ok ? std::exp(log) : kNan; }
};

// Strict comparison of two gamma ratios in log space, ledger in linear scale.
Hypothesis ratio_less(std::string name, const GammaRatio& lhs, const GammaRatio& rhs) {
  const bool ok = lhs.ok && rhs.ok;
  return {std::move(name), ok && lhs.log < rhs.log, lhs.value(), rhs.value()};
}

Hypothesis domain_at_least_one(const WrightParams& p) {
  const double m = std::min(std::min(p.a, p.b), std::min(p.mu, p.nu));
  return {"domain: a, b, mu, nu >= 1", m >= 1.0, m, 1.0};
}

Hypothesis domain_positive(const WrightParams& p) {
  const double m = std::min(std::min(p.a, p.b), std::min(p.mu, p.nu));
  return {"domain: a, b, mu, nu > 0", m > 0.0 && gamma_args_ok(p), m, 0.0};
}

double alpha_or_nan(const WrightParams& p, int k) {
  if (!gamma_args_ok(p)) return kNan;
  return coeff_alpha(p, k);
}

void finish(CriterionReport& r) {
  r.verdict = Verdict::Established;
  for (const auto& h : r.hypotheses)
    if (!h.holds) r.verdict = Verdict::NotEstablished;
  if (r.note.empty()) r.note = kSufficiencyNote;
}

// Threshold reports share the same shape: domain row plus b >= T(a).
CriterionReport threshold_report(std::string id, const WrightParams& p, double threshold,
                                 PropertyRegion concl) {
  CriterionReport r;
  r.id = std::move(id);
  r.params = p;
  r.conclusion = concl;
  r.hypotheses.push_back(domain_at_least_one(p));
  r.hypotheses.push_back(
      {"b >= threshold(a)", std::isfinite(threshold) && p.b >= threshold, p.b, threshold});
  finish(r);
  return r;
}

}  // namespace

// --- Fox-Wright-bound criteria --------------------------------------------

CriterionReport starlike_disk_series_bound(const WrightParams& p) {
  CriterionReport r;
  r.id = "starlike-disk/series-bound";
  r.params = p;
  r.conclusion = {PropertyRegion::Kind::StarlikeDisk, Region::FullDisk};
  r.hypotheses.push_back(domain_at_least_one(p));

  const double a = p.a, b = p.b, mu = p.mu, nu = p.nu;
  double thr = kNan;
  if (a > 0.0) {
    const double q = a * a - a - 1.0;
    thr = (-q + std::sqrt(q * q + 4.0 * (a + 1.0) * (a * a + a))) / (2.0 * (a * a + a));
  }
  r.hypotheses.push_back({"b above root threshold", std::isfinite(thr) && b > thr, b, thr});

  r.hypotheses.push_back(ratio_less(
      "ratio condition (i)", GammaRatio{}.mul(a + 2 * mu).div(a + 3 * mu),
      GammaRatio{}.mul(b + 3 * nu).div(b + 2 * nu).scale(1.0 / 3.0)));
  r.hypotheses.push_back(ratio_less(
      "ratio condition (ii)", GammaRatio{}.mul(a + mu).mul(a + 3 * mu).div(a + 2 * mu).div(a + 2 * mu),
      GammaRatio{}.mul(b + 2 * nu).mul(b + 2 * nu).div(b + nu).div(b + 3 * nu).scale(1.5)));

  const double lhs3 = alpha_or_nan(p, 1) + 2.0 * (kE - 1.0) * alpha_or_nan(p, 2);
  const double denom = a * b * (a + b + a * b);
  const double rhs3 = (denom - (a + 1.0) * (b + 1.0)) / denom;
  r.hypotheses.push_back({"growth condition (iii)", lhs3 < rhs3, lhs3, rhs3});
  finish(r);
  return r;
}

CriterionReport convex_half_series_bound(const WrightParams& p) {
  CriterionReport r;
  r.id = "convex-half/series-bound";
  r.params = p;
  r.conclusion = {PropertyRegion::Kind::ConvexHalf, Region::HalfDisk};
  r.hypotheses.push_back(domain_positive(p));

  const double a = p.a, b = p.b, mu = p.mu, nu = p.nu;
  r.hypotheses.push_back(ratio_less(
      "ratio condition (i)", GammaRatio{}.mul(a + 2 * mu).div(a + 3 * mu),
      GammaRatio{}.mul(b + 3 * nu).div(b + 2 * nu).scale(3.0 / 8.0)));
  r.hypotheses.push_back(ratio_less(
      "ratio condition (ii)", GammaRatio{}.mul(a + mu).mul(a + 3 * mu).div(a + 2 * mu).div(a + 2 * mu),
      GammaRatio{}.mul(b + 2 * nu).mul(b + 2 * nu).div(b + nu).div(b + 3 * nu).scale(16.0 / 9.0)));
  const double lhs3 = 2.0 * alpha_or_nan(p, 1) + 3.0 * (kE - 1.0) * alpha_or_nan(p, 2);
  r.hypotheses.push_back({"growth condition (iii)", lhs3 < 1.0, lhs3, 1.0});
  finish(r);
  return r;
}

CriterionReport starlike_disk_deriv_bound(const WrightParams& p) {
  CriterionReport r;
  r.id = "starlike-disk/deriv-bound";
  r.params = p;
  r.conclusion = {PropertyRegion::Kind::StarlikeDisk, Region::FullDisk};
  r.hypotheses.push_back(domain_positive(p));

  const double a = p.a, b = p.b, mu = p.mu, nu = p.nu;
  r.hypotheses.push_back(ratio_less(
      "ratio condition (i)", GammaRatio{}.mul(a + 2 * mu).div(a + 3 * mu),
      GammaRatio{}.mul(b + 3 * nu).div(b + 2 * nu).scale(3.0 / 8.0)));
  r.hypotheses.push_back(ratio_less(
      "ratio condition (ii)", GammaRatio{}.mul(a + mu).mul(a + 3 * mu).div(a + 2 * mu).div(a + 2 * mu),
      GammaRatio{}.mul(b + 2 * nu).mul(b + 2 * nu).div(b + nu).div(b + 3 * nu).scale(16.0 / 9.0)));
  const double lhs3 = 2.0 * alpha_or_nan(p, 1) + 3.0 * (kE - 1.0) * alpha_or_nan(p, 2);
  const double rhs3 = 2.0 / std::sqrt(5.0);
  r.hypotheses.push_back({"derivative deviation bound", lhs3 < rhs3, lhs3, rhs3});
  finish(r);
  return r;
}

CriterionReport starlike_half_series_bound(const WrightParams& p) {
  CriterionReport r;
  r.id = "starlike-half/series-bound";
  r.params = p;
  r.conclusion = {PropertyRegion::Kind::StarlikeHalf, Region::HalfDisk};
  r.hypotheses.push_back(domain_positive(p));

  const double a = p.a, b = p.b, mu = p.mu, nu = p.nu;
  r.hypotheses.push_back(ratio_less(
      "ratio condition (i)", GammaRatio{}.mul(a + 2 * mu).div(a + 3 * mu),
      GammaRatio{}.mul(b + 3 * nu).div(b + 2 * nu).scale(0.5)));
  r.hypotheses.push_back(ratio_less(
      "ratio condition (ii)", GammaRatio{}.mul(a + mu).mul(a + 3 * mu).div(a + 2 * mu).div(a + 2 * mu),
      GammaRatio{}.mul(b + 2 * nu).mul(b + 2 * nu).div(b + nu).div(b + 3 * nu).scale(2.0)));
  const double lhs3 = alpha_or_nan(p, 1) + (kE - 1.0) * alpha_or_nan(p, 2);
  r.hypotheses.push_back({"growth condition (iii)", lhs3 < 1.0, lhs3, 1.0});
  finish(r);
  return r;
}

CriterionReport ucv_series_bound(const WrightParams& p) {
  CriterionReport r;
  r.id = "ucv/series-bound";
  r.params = p;
  r.conclusion = {PropertyRegion::Kind::Ucv, Region::FullDisk};
  r.hypotheses.push_back(domain_positive(p));

  const double a = p.a, b = p.b, mu = p.mu, nu = p.nu;
  r.hypotheses.push_back(ratio_less(
      "ratio condition (i)", GammaRatio{}.mul(a + mu).div(a + 2 * mu),
      GammaRatio{}.mul(b + 2 * nu).div(b + nu).scale(0.25)));
  r.hypotheses.push_back(ratio_less(
      "ratio condition (ii)", GammaRatio{}.mul(a).mul(a + 2 * mu).div(a + mu).div(a + mu),
      GammaRatio{}.mul(b + 2 * nu).mul(b + 2 * nu).div(b + nu).div(b + 3 * nu).scale(4.0 / 3.0)));
  const double lhs3 = alpha_or_nan(p, 1) + 3.0 * (kE - 1.0) * alpha_or_nan(p, 2);
  r.hypotheses.push_back({"growth condition (iii)", lhs3 < 0.25, lhs3, 0.25});

  // Auxiliary inequality sets used by the proof route (informative only).
  r.auxiliary.push_back(ratio_less(
      "aux second-moment ratio", GammaRatio{}.mul(a + mu).mul(a + 3 * mu).div(a + 2 * mu).div(a + 2 * mu),
      GammaRatio{}.mul(b + 2 * nu).mul(b + 2 * nu).div(b + nu).div(b + 3 * nu).scale(4.0 / 3.0)));
  r.auxiliary.push_back(ratio_less(
      "aux derivative ratio (i)", GammaRatio{}.mul(a + 2 * mu).div(a + 3 * mu),
      GammaRatio{}.mul(b + 3 * nu).div(b + 2 * nu).scale(3.0 / 8.0)));
  r.auxiliary.push_back(ratio_less(
      "aux derivative ratio (ii)", GammaRatio{}.mul(a + mu).mul(a + 3 * mu).div(a + 2 * mu).div(a + 2 * mu),
      GammaRatio{}.mul(b + 2 * nu).mul(b + 2 * nu).div(b + nu).div(b + 3 * nu).scale(16.0 / 9.0)));
  finish(r);
  return r;
}

// --- Closed-form thresholds -------------------------------------------------

double threshold_starlike_b(double a) {
  if (!(a > 0.0)) return kNan;
  return (3.0 * a + 2.0) / (a * (a + 1.0));
}

double threshold_starlike_order_b(double a, double eta) {
  if (!(a > 0.0) || !(eta >= 0.0 && eta < 1.0)) return kNan;
  const double t = 1.0 - eta;
  const double A = t * a * (a + 1.0);
  const double B = t * a * a - (1.0 + t) * (a + 1.0);
  const double C = -((1.0 + t) * (a + 1.0) + a);
  const double disc = B * B - 4.0 * A * C;
  if (disc < 0.0) return kNan;
  return (-B + std::sqrt(disc)) / (2.0 * A);
}

double threshold_sp_b(double a) {
  if (!(a > 0.0)) return kNan;
  const double rad = ((a * a + 14.0 * a + 35.0) * a + 30.0) * a + 9.0;
  return (3.0 * (a + 1.0) - a * a + std::sqrt(rad)) / (2.0 * a * (a + 1.0));
}

double threshold_starlike_half_b(double a) {
  if (!(a > 0.0)) return kNan;
  const double rad = ((a * a + 2.0 * a + 7.0) * a + 6.0) * a + 1.0;
  return ((a + 1.0 - a * a) + std::sqrt(rad)) / (2.0 * a * (a + 1.0));
}

double threshold_starlike_deviation_b(double a) {
  if (!(a > 0.0)) return kNan;
  const double s5 = std::sqrt(5.0);
  const double rad =
      ((4.0 * a + 4.0 * s5) * a + (5.0 + 12.0 * s5)) * a * a + 2.0 * (5.0 + 4.0 * s5) * a + 5.0;
  return (s5 * (a + 1.0) - 2.0 * a * a + std::sqrt(rad)) / (4.0 * a * (a + 1.0));
}

double threshold_convex_half_b(double a) {
  if (!(a > 0.0)) return kNan;
  return ((3.0 - a) + std::sqrt(a * a + 2.0 * a + 9.0)) / (2.0 * a);
}

double threshold_starlike_deriv_b(double a) {
  if (!(a > 0.0)) return kNan;
  const double s5 = std::sqrt(5.0);
  const double rad = ((4.0 * a + 8.0 * s5) * a + 20.0 * (1.0 + s5)) * a * a +
                     4.0 * (15.0 + 4.0 * s5) * a + 45.0;
  return (s5 * (2.0 * a + 3.0) - 2.0 * a * a + std::sqrt(rad)) / (4.0 * a * (a + 1.0));
}

CriterionReport starlike_disk_threshold(const WrightParams& p) {
  return threshold_report("starlike-disk/threshold", p, threshold_starlike_b(p.a),
                          {PropertyRegion::Kind::StarlikeDisk, Region::FullDisk});
}

CriterionReport close_to_convex_threshold(const WrightParams& p) {
  PropertyRegion concl{PropertyRegion::Kind::CloseToConvex, Region::FullDisk};
  concl.witness = WrightParams{p.mu, p.a, 1.0, p.b};
  return threshold_report("close-to-convex/threshold", p, threshold_starlike_b(p.a), concl);
}

CriterionReport starlike_order_threshold(const WrightParams& p, double eta) {
  if (!(eta >= 0.0 && eta < 1.0))
    throw std::domain_error("starlike_order_threshold: eta must be in [0,1)");
  CriterionReport r;
  r.id = "starlike-order/threshold";
  r.params = p;
  r.conclusion = {PropertyRegion::Kind::StarlikeOrder, Region::FullDisk, eta};
  r.hypotheses.push_back(domain_at_least_one(p));
  const double thr = threshold_starlike_order_b(p.a, eta);
  if (!std::isfinite(thr) && p.a > 0.0) {
    r.hypotheses.push_back({"discriminant >= 0", false, -1.0, 0.0});
  } else {
    r.hypotheses.push_back({"b >= threshold(a, eta)", std::isfinite(thr) && p.b >= thr, p.b, thr});
  }
  finish(r);
  return r;
}

CriterionReport sp_threshold(const WrightParams& p) {
  return threshold_report("sp/threshold", p, threshold_sp_b(p.a),
                          {PropertyRegion::Kind::SpClass, Region::FullDisk});
}

std::array<CriterionReport, 2> half_and_full_starlike_thresholds(const WrightParams& p) {
  return {threshold_report("starlike-half/threshold", p, threshold_starlike_half_b(p.a),
                           {PropertyRegion::Kind::StarlikeHalf, Region::HalfDisk}),
          threshold_report("starlike-disk/threshold-dev", p, threshold_starlike_deviation_b(p.a),
                           {PropertyRegion::Kind::StarlikeDisk, Region::FullDisk})};
}

std::array<CriterionReport, 2> convex_half_and_starlike_thresholds(const WrightParams& p) {
  return {threshold_report("convex-half/threshold", p, threshold_convex_half_b(p.a),
                           {PropertyRegion::Kind::ConvexHalf, Region::HalfDisk}),
          threshold_report("starlike-disk/threshold-deriv", p, threshold_starlike_deriv_b(p.a),
                           {PropertyRegion::Kind::StarlikeDisk, Region::FullDisk})};
}

// --- Presets ----------------------------------------------------------------

WrightParams preset_params(const FamilyPreset& f) {
  switch (f.kind) {
    case FamilyPreset::Kind::ConfluentF:
      return {1.0, 1.0, 1.0, f.b};
    case FamilyPreset::Kind::Bessel:
      // Argument-symmetric orientation: swapping the two gamma factors leaves
      // the series unchanged and puts the varying parameter in the b slot.
      return {1.0, 1.0, 1.0, f.beta + 1.0};
    case FamilyPreset::Kind::TwoParam:
      return {1.0, 1.0, f.nu, f.b};
  }
  throw std::logic_error("preset_params: unknown family");
}

std::vector<CriterionReport> confluent_presets(double b) {
  const WrightParams p{1.0, 1.0, 1.0, b};
  auto fixed = [&](const char* id, double thr, PropertyRegion concl) {
    CriterionReport r;
    r.id = id;
    r.params = p;
    r.conclusion = concl;
    r.hypotheses.push_back({"b > 0", b > 0.0, b, 0.0});
    r.hypotheses.push_back({"b >= threshold", b > 0.0 && b >= thr, b, thr});
    r.note = "fixed confluent-family threshold, coded as published";
    finish(r);
    return r;
  };
  return {
      fixed("confluent/starlike-disk", 1.25, {PropertyRegion::Kind::StarlikeDisk, Region::FullDisk}),
      fixed("confluent/sp", (5.0 + std::sqrt(89.0)) / 4.0,
            {PropertyRegion::Kind::SpClass, Region::FullDisk}),
      fixed("confluent/starlike-half", (1.0 + std::sqrt(17.0)) / 4.0,
            {PropertyRegion::Kind::StarlikeHalf, Region::HalfDisk}),
      fixed("confluent/convex-half", 1.0 + std::sqrt(3.0),
            {PropertyRegion::Kind::ConvexHalf, Region::HalfDisk}),
  };
}

std::vector<CriterionReport> family_presets(const FamilyPreset& f) {
  std::vector<CriterionReport> out;
  if (f.kind == FamilyPreset::Kind::ConfluentF) out = confluent_presets(f.b);
  const auto general = all_criteria(preset_params(f));
  out.insert(out.end(), general.begin(), general.end());
  return out;
}

std::vector<CriterionReport> all_criteria(const WrightParams& p, std::optional<double> eta) {
  std::vector<CriterionReport> out;
  out.push_back(starlike_disk_series_bound(p));
  out.push_back(convex_half_series_bound(p));
  out.push_back(starlike_disk_deriv_bound(p));
  out.push_back(starlike_half_series_bound(p));
  out.push_back(ucv_series_bound(p));
  out.push_back(starlike_disk_threshold(p));
  out.push_back(close_to_convex_threshold(p));
  out.push_back(sp_threshold(p));
  for (auto& r : half_and_full_starlike_thresholds(p)) out.push_back(std::move(r));
  for (auto& r : convex_half_and_starlike_thresholds(p)) out.push_back(std::move(r));
  if (eta) out.push_back(starlike_order_threshold(p, *eta));
  return out;
}

}  // namespace wright
