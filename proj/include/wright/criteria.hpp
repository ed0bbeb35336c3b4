#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wright/property.hpp"
#include "wright/series.hpp"

namespace wright {

/// One inequality of a sufficient condition, with both evaluated sides.
struct Hypothesis {
  std::string name;
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

enum class Verdict { Established, NotEstablished };

/// Ledger for one sufficient-condition check. Established means every listed
/// hypothesis holds; NotEstablished never asserts the property fails (these
/// are sufficient conditions only), which the note records.
struct CriterionReport {
  std::string id;
  WrightParams params;
  std::vector<Hypothesis> hypotheses;
  std::vector<Hypothesis> auxiliary;  // informative extras, not part of the verdict
  PropertyRegion conclusion;
  Verdict verdict = Verdict::NotEstablished;
  std::string note;

  bool established() const { return verdict == Verdict::Established; }
};

// --- Sufficient conditions routed through the Fox-Wright enclosure -------

// Starlike on the full disk (domain a,b,mu,nu >= 1 plus a b-threshold and
// three gamma-ratio inequalities).
CriterionReport starlike_disk_series_bound(const WrightParams& p);

// Convex on |z| < 1/2 (three gamma-ratio inequalities, positive parameters).
CriterionReport convex_half_series_bound(const WrightParams& p);

// Starlike on the full disk via the derivative deviation bound 2/sqrt(5).
CriterionReport starlike_disk_deriv_bound(const WrightParams& p);

// Starlike on |z| < 1/2 (three gamma-ratio inequalities).
CriterionReport starlike_half_series_bound(const WrightParams& p);

// Uniformly convex (printed three-part condition; the proof's auxiliary
// inequality sets are evaluated into the auxiliary ledger).
CriterionReport ucv_series_bound(const WrightParams& p);

// --- Closed-form threshold conditions (domain a,b,mu,nu >= 1) ------------

double threshold_starlike_b(double a);          // (3a+2)/(a(a+1))
double threshold_starlike_order_b(double a, double eta);
double threshold_sp_b(double a);
double threshold_starlike_half_b(double a);     // phi_1
double threshold_starlike_deviation_b(double a);  // phi_2 (2/sqrt5 route)
double threshold_convex_half_b(double a);       // psi_1
double threshold_starlike_deriv_b(double a);    // psi_2 (derivative 2/sqrt5 route)

CriterionReport starlike_disk_threshold(const WrightParams& p);
// Same threshold, close-to-convexity conclusion with witness (mu,a),(1,b).
CriterionReport close_to_convex_threshold(const WrightParams& p);
CriterionReport starlike_order_threshold(const WrightParams& p, double eta);
CriterionReport sp_threshold(const WrightParams& p);
// (i) starlike on the half disk, (ii) starlike on the full disk.
std::array<CriterionReport, 2> half_and_full_starlike_thresholds(const WrightParams& p);
// (i) convex on the half disk, (ii) starlike on the full disk.
std::array<CriterionReport, 2> convex_half_and_starlike_thresholds(const WrightParams& p);

// --- Family presets -------------------------------------------------------

struct FamilyPreset {
  enum class Kind { ConfluentF, Bessel, TwoParam } kind;
  double b = 0.0;     // ConfluentF / TwoParam
  double beta = 0.0;  // Bessel
  double nu = 1.0;    // TwoParam
};

/// Wright parameters realizing a preset family. The Bessel map uses the
/// argument-symmetric orientation (mu=1, a=1, nu=1, b=beta+1), under which
/// the starlike threshold lands at beta = 3/2.
WrightParams preset_params(const FamilyPreset& f);

/// Fixed thresholds for z * 0F1(-; b; z): starlike disk at 5/4, S_p class at
/// (5+sqrt 89)/4, starlike half disk at (1+sqrt 17)/4, convex half disk at
/// 1+sqrt 3 (each coded as published for this family).
std::vector<CriterionReport> confluent_presets(double b);

std::vector<CriterionReport> family_presets(const FamilyPreset& f);

/// Every criterion applicable to the given parameters (order is stable).
std::vector<CriterionReport> all_criteria(const WrightParams& p,
                                          std::optional<double> eta = std::nullopt);

}  // namespace wright
