#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wright/disk_function.hpp"
#include "wright/property.hpp"

namespace wright {

enum class RadialSpacing { Uniform, BoundaryClustered };

struct GridSpec {
  double r_max = 1.0 - 1e-3;
  int n_radii = 64;
  int n_angles = 256;
  RadialSpacing spacing = RadialSpacing::BoundaryClustered;

  void require_valid() const;  // r_max in (0,1), n_radii >= 2, n_angles >= 8
  std::vector<double> radii() const;
  std::vector<double> angles() const;
};

GridSpec default_grid(Region region);

enum class CheckVerdict { NoViolationFound, ViolationFound };

/// Sampling result. Sampling can falsify an open condition but never prove
/// it, so NoViolationFound is exactly that; margins are already reduced by
/// the certified series-truncation slack.
struct PropertyCheck {
  PropertyRegion property;
  GridSpec grid;
  double extremal_value = 0.0;
  cplx extremal_point = 0.0;
  double margin = 0.0;
  CheckVerdict verdict = CheckVerdict::NoViolationFound;
  std::string diagnostic;

  bool ok() const { return verdict == CheckVerdict::NoViolationFound; }
};

/// Real or generated coefficient sequence gamma_k, k >= 1. When unbounded,
/// `length` caps the scan and the generator's term ratio must keep shrinking
/// past the cap (true for all reciprocal-gamma sequences used here).
struct SequenceSpec {
  std::function<double(int)> gamma;
  int length = 32;
  bool unbounded = false;

  static SequenceSpec finite(std::vector<double> values);
};

// min Re(z f'/f) over the grid (analytic limit 1 at z = 0); margin is that
// minimum minus eta. A vanishing f at a nonzero grid point is a violation.
PropertyCheck check_starlike(const DiskFunction& f, double region_radius, const GridSpec& grid,
                             double eta = 0.0);

// min Re(1 + z f''/f').
PropertyCheck check_convex(const DiskFunction& f, double region_radius, const GridSpec& grid);

// max |z f''/f'| against 1/2.
PropertyCheck check_ucv(const DiskFunction& f, const GridSpec& grid);

// max |z f'/f - 1| against 1/2.
PropertyCheck check_sp(const DiskFunction& f, const GridSpec& grid);

// min Re(z f'/g) for a normalized witness g (g(0)=0, g'(0)=1 enforced).
PropertyCheck check_close_to_convex(const DiskFunction& f, const DiskFunction& g,
                                    const GridSpec& grid);

// min Re of the raw series at a = b = 1 (or its N-term partial sum) against 1/2.
PropertyCheck check_half_plane(const WrightParams& p, const GridSpec& grid, int partial_terms = -1);

// min Re(1 + 2 sum gamma_k z^k), truncation tail folded into the margin.
PropertyCheck check_subordinating_sequence(const SequenceSpec& seq, const GridSpec& grid);

enum class DeviationMode { FOverZMinusOne, FPrimeMinusOne };

// max |f/z - 1| or |f' - 1| against a threshold.
PropertyCheck check_bound_deviation(const DiskFunction& f, DeviationMode mode, double threshold,
                                    const GridSpec& grid);

// Both difference inequalities 0 >= a_{k+2} - a_{k+1} >= a_{k+1} - a_k.
bool check_convex_decreasing(const SequenceSpec& seq);

/// Oracle check matching a criterion conclusion; used to cross-examine
/// Established verdicts. r_shrink trims the sampled radius (grid default).
PropertyCheck check_conclusion(const PropertyRegion& concl, const WrightParams& p,
                               const GridSpec* grid_override = nullptr);

}  // namespace wright
