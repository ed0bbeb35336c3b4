#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wright/criteria.hpp"
#include "wright/disk_check.hpp"

namespace wright {

enum class SweepFamily { FourParam, TwoParam, Bessel, ConfluentF };

/// One-dimensional parameter sweep of criterion verdicts (optionally with
/// oracle margins) plus bisected verdict boundaries.
struct SweepSpec {
  SweepFamily family = SweepFamily::TwoParam;
  std::string varying;  // "mu" | "a" | "nu" | "b" | "beta"
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;
  std::map<std::string, double> fixed;      // remaining parameter values
  std::vector<std::string> criterion_ids;   // empty = all applicable
  bool with_oracle = false;

  void require_valid() const;
};

struct SweepRow {
  double value = 0.0;
  std::vector<std::pair<std::string, bool>> verdicts;     // criterion id -> Established
  std::vector<std::pair<std::string, double>> margins;    // oracle margin, when requested
};

struct SweepBoundary {
  std::string criterion;
  double location = 0.0;  // bisected to 1e-6 or better
  bool rising = false;    // false->true when the parameter crosses upward
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;
  std::vector<SweepBoundary> boundaries;
};

/// Bisect a verdict change inside [lo, hi]; the verdict must differ at the
/// endpoints and be monotone across the bracket.
double boundary_bisect(const std::function<bool(double)>& verdict, double lo, double hi,
                       double tol = 1e-8);

/// Scan the range, collect verdicts (asserting each criterion's verdict
/// pattern is interval-shaped across the scan), and bisect every transition.
SweepResult run_sweep(const SweepSpec& spec);

std::string render_table(const SweepResult& r);
std::string render_json(const SweepResult& r);

}  // namespace wright
