#include "wright/disk_check.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace wright {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Extremum {
  double value;
  cplx where;
};

// Minimize `f` over the grid; `at_zero` supplies the analytic value at the
// origin (every integrand here is smooth there but 0/0 as written).
template <class Fn>
Extremum grid_min(const GridSpec& grid, double at_zero, Fn&& fn) {
  Extremum best{at_zero, 0.0};
  for (double r : grid.radii()) {
    for (double th : grid.angles()) {
      const cplx z = std::polar(r, th);
      const double v = fn(z);
      if (v < best.value) best = {v, z};
    }
  }
  return best;
}

template <class Fn>
Extremum grid_max(const GridSpec& grid, double at_zero, Fn&& fn) {
  Extremum best{at_zero, 0.0};
  for (double r : grid.radii()) {
    for (double th : grid.angles()) {
      const cplx z = std::polar(r, th);
      const double v = fn(z);
      if (v > best.value) best = {v, z};
    }
  }
  return best;
}

GridSpec scaled_grid(const GridSpec& grid, double region_radius) {
  GridSpec g = grid;
  // Keep strictly inside the asserted region.
  const double cap = region_radius - 1e-3;
  if (g.r_max > cap) g.r_max = cap;
  g.require_valid();
  return g;
}

}  // namespace

void GridSpec::require_valid() const {
  if (!(r_max > 0.0 && r_max < 1.0)) throw std::domain_error("GridSpec: r_max must be in (0,1)");
  if (n_radii < 2) throw std::domain_error("GridSpec: n_radii must be >= 2");
  if (n_angles < 8) throw std::domain_error("GridSpec: n_angles must be >= 8");
}

std::vector<double> GridSpec::radii() const {
  std::vector<double> out(n_radii);
  for (int i = 0; i < n_radii; ++i) {
    const double t = double(i + 1) / n_radii;
    out[i] = spacing == RadialSpacing::BoundaryClustered
                 ? r_max * std::sin(0.5 * std::numbers::pi * t)
                 : r_max * t;
  }
  return out;
}

std::vector<double> GridSpec::angles() const {
  std::vector<double> out(n_angles);
  for (int j = 0; j < n_angles; ++j) out[j] = 2.0 * std::numbers::pi * j / n_angles;
  return out;
}

GridSpec default_grid(Region region) {
  GridSpec g;
  g.r_max = (region == Region::FullDisk ? 1.0 : 0.5) - 1e-3;
  return g;
}

SequenceSpec SequenceSpec::finite(std::vector<double> values) {
  SequenceSpec s;
  s.length = static_cast<int>(values.size());
  s.unbounded = false;
  s.gamma = [vals = std::move(values)](int k) { return vals.at(k - 1); };
  return s;
}

PropertyCheck check_starlike(const DiskFunction& f, double region_radius, const GridSpec& grid,
                             double eta) {
  if (!(eta >= 0.0 && eta < 1.0)) throw std::domain_error("check_starlike: eta must be in [0,1)");
  PropertyCheck out;
  out.property = {eta == 0.0 ? (region_radius < 1.0 ? PropertyRegion::Kind::StarlikeHalf
                                                    : PropertyRegion::Kind::StarlikeDisk)
                             : PropertyRegion::Kind::StarlikeOrder,
                  region_radius < 1.0 ? Region::HalfDisk : Region::FullDisk, eta};
  out.grid = scaled_grid(grid, region_radius);

  bool vanished = false;
  cplx vanish_at = 0.0;
  double slack = 0.0;
  const auto ext = grid_min(out.grid, 1.0, [&](cplx z) {
    const cplx fv = f.value(z);
    const cplx dv = f.deriv(z);
    const double af = std::abs(fv);
    if (af <= f.value_err()) {
      if (!vanished) vanish_at = z;
      vanished = true;
      return kInf;  // handled below; value at this point cannot be trusted
    }
    const cplx q = z * dv / fv;
    // error on Re q from the frozen truncation tails
    const double err = (std::abs(z) * f.deriv_err() + std::abs(q) * f.value_err()) / af;
    if (err > slack) slack = err;
    return q.real();
  });
  out.extremal_value = ext.value;
  out.extremal_point = ext.where;
  out.margin = ext.value - eta - slack;
  if (vanished) {
    out.margin = -kInf;
    out.extremal_point = vanish_at;
    out.diagnostic = "f vanishes (within tolerance) at a nonzero grid point";
  }
  out.verdict = out.margin < 0.0 ? CheckVerdict::ViolationFound : CheckVerdict::NoViolationFound;
  return out;
}

PropertyCheck check_convex(const DiskFunction& f, double region_radius, const GridSpec& grid) {
  PropertyCheck out;
  out.property = {PropertyRegion::Kind::ConvexHalf,
                  region_radius < 1.0 ? Region::HalfDisk : Region::FullDisk};
  out.grid = scaled_grid(grid, region_radius);
  bool vanished = false;
  double slack = 0.0;
  const auto ext = grid_min(out.grid, 1.0, [&](cplx z) {
    const cplx d1 = f.deriv(z);
    const cplx d2 = f.deriv2(z);
    const double ad1 = std::abs(d1);
    if (ad1 <= f.deriv_err()) {
      vanished = true;
      return kInf;
    }
    const cplx w = z * d2 / d1;
    const double err = (std::abs(z) * f.deriv2_err() + std::abs(w) * f.deriv_err()) / ad1;
    if (err > slack) slack = err;
    return 1.0 + w.real();
  });
  out.extremal_value = ext.value;
  out.extremal_point = ext.where;
  out.margin = ext.value - slack;
  if (vanished) {
    out.margin = -kInf;
    out.diagnostic = "f' vanishes (within tolerance) at a grid point";
  }
  out.verdict = out.margin < 0.0 ? CheckVerdict::ViolationFound : CheckVerdict::NoViolationFound;
  return out;
}

PropertyCheck check_ucv(const DiskFunction& f, const GridSpec& grid) {
  PropertyCheck out;
  out.property = {PropertyRegion::Kind::Ucv, Region::FullDisk};
  grid.require_valid();
  out.grid = grid;
  bool vanished = false;
  double slack = 0.0;
  const auto ext = grid_max(grid, 0.0, [&](cplx z) {
    const cplx d1 = f.deriv(z);
    const cplx d2 = f.deriv2(z);
    const double ad1 = std::abs(d1);
    if (ad1 <= f.deriv_err()) {
      vanished = true;
      return kInf;
    }
    const cplx w = z * d2 / d1;
    const double err = (std::abs(z) * f.deriv2_err() + std::abs(w) * f.deriv_err()) / ad1;
    if (err > slack) slack = err;
    return std::abs(w);
  });
  out.extremal_value = ext.value;
  out.extremal_point = ext.where;
  out.margin = 0.5 - ext.value - slack;
  if (vanished) {
    out.margin = -kInf;
    out.diagnostic = "f' vanishes (within tolerance) at a grid point";
  }
  out.verdict = out.margin < 0.0 ? CheckVerdict::ViolationFound : CheckVerdict::NoViolationFound;
  return out;
}

PropertyCheck check_sp(const DiskFunction& f, const GridSpec& grid) {
  PropertyCheck out;
  out.property = {PropertyRegion::Kind::SpClass, Region::FullDisk};
  grid.require_valid();
  out.grid = grid;
  bool vanished = false;
  double slack = 0.0;
  const auto ext = grid_max(grid, 0.0, [&](cplx z) {
    const cplx fv = f.value(z);
    const double af = std::abs(fv);
    if (af <= f.value_err()) {
      vanished = true;
      return kInf;
    }
    const cplx q = z * f.deriv(z) / fv;
    const double err = (std::abs(z) * f.deriv_err() + std::abs(q) * f.value_err()) / af;
    if (err > slack) slack = err;
    return std::abs(q - 1.0);
  });
  out.extremal_value = ext.value;
  out.extremal_point = ext.where;
  out.margin = 0.5 - ext.value - slack;
  if (vanished) {
    out.margin = -kInf;
    out.diagnostic = "f vanishes (within tolerance) at a nonzero grid point";
  }
  out.verdict = out.margin < 0.0 ? CheckVerdict::ViolationFound : CheckVerdict::NoViolationFound;
  return out;
}

PropertyCheck check_close_to_convex(const DiskFunction& f, const DiskFunction& g,
                                    const GridSpec& grid) {
  if (std::abs(g.value(0.0)) > 1e-12 || std::abs(g.deriv(0.0) - 1.0) > 1e-12)
    throw std::invalid_argument("check_close_to_convex: witness must satisfy g(0)=0, g'(0)=1");
  PropertyCheck out;
  out.property = {PropertyRegion::Kind::CloseToConvex, Region::FullDisk};
  grid.require_valid();
  out.grid = grid;
  bool vanished = false;
  double slack = 0.0;
  const auto ext = grid_min(grid, 1.0, [&](cplx z) {
    const cplx gv = g.value(z);
    const double ag = std::abs(gv);
    if (ag <= g.value_err()) {
      vanished = true;
      return kInf;
    }
    const cplx q = z * f.deriv(z) / gv;
    const double err = (std::abs(z) * f.deriv_err() + std::abs(q) * g.value_err()) / ag;
    if (err > slack) slack = err;
    return q.real();
  });
  out.extremal_value = ext.value;
  out.extremal_point = ext.where;
  out.margin = ext.value - slack;
  if (vanished) {
    out.margin = -kInf;
    out.diagnostic = "witness vanishes (within tolerance) at a nonzero grid point";
  }
  out.verdict = out.margin < 0.0 ? CheckVerdict::ViolationFound : CheckVerdict::NoViolationFound;
  return out;
}

PropertyCheck check_half_plane(const WrightParams& p, const GridSpec& grid, int partial_terms) {
  if (p.a != 1.0 || p.b != 1.0)
    throw std::domain_error("check_half_plane: requires a = b = 1");
  PropertyCheck out;
  out.property = {PropertyRegion::Kind::HalfPlaneRe, Region::FullDisk};
  grid.require_valid();
  out.grid = grid;
  std::unique_ptr<DiskFunction> f =
      partial_terms >= 1 ? make_partial_sum_function(p, partial_terms, PartialSumKind::RawPartialSum)
                         : make_raw_wright(p, grid.r_max, 1e-13);
  const double slack = f->value_err();
  const auto ext =
      grid_min(grid, f->value(0.0).real(), [&](cplx z) { return f->value(z).real(); });
  out.extremal_value = ext.value;
  out.extremal_point = ext.where;
  out.margin = ext.value - 0.5 - slack;
  out.verdict = out.margin < 0.0 ? CheckVerdict::ViolationFound : CheckVerdict::NoViolationFound;
  return out;
}

PropertyCheck check_subordinating_sequence(const SequenceSpec& seq, const GridSpec& grid) {
  if (seq.unbounded && seq.length < 8)
    throw std::domain_error("check_subordinating_sequence: unbounded sequences need cap >= 8");
  std::vector<double> g(seq.length + 1, 0.0);
  for (int k = 1; k <= seq.length; ++k) g[k] = seq.gamma(k);

  // Tail of the generator beyond the cap, bounded geometrically at r_max.
  // Requires the coefficient ratio to keep shrinking past the cap, which is
  // spot-checked over a window (true for the reciprocal-gamma sequences here).
  double tail = 0.0;
  if (seq.unbounded) {
    double prev_ratio = kInf;
    for (int j = seq.length; j < seq.length + 16; ++j) {
      const double den = std::abs(seq.gamma(j));
      const double num = std::abs(seq.gamma(j + 1));
      const double ratio = den > 0.0 ? num / den : 0.0;
      if (ratio > prev_ratio + 1e-12)
        throw std::domain_error(
            "check_subordinating_sequence: generator ratio must not increase past the cap");
      prev_ratio = ratio;
    }
    const double gK = std::abs(seq.gamma(seq.length));
    const double rho = grid.r_max * (gK > 0.0 ? std::abs(seq.gamma(seq.length + 1)) / gK : 0.0);
    if (rho >= 1.0)
      throw std::domain_error("check_subordinating_sequence: tail not summable at r_max");
    tail = gK * std::pow(grid.r_max, seq.length) * rho / (1.0 - rho);
  }

  PropertyCheck out;
  out.property = {PropertyRegion::Kind::HalfPlaneRe, Region::FullDisk};
  grid.require_valid();
  out.grid = grid;
  const auto ext = grid_min(grid, 1.0, [&](cplx z) {
    cplx acc = 0.0;
    for (int k = seq.length; k >= 1; --k) acc = (acc + g[k]) * z;
    return 1.0 + 2.0 * acc.real();
  });
  out.extremal_value = ext.value;
  out.extremal_point = ext.where;
  out.margin = ext.value - 2.0 * tail;
  out.verdict = out.margin < 0.0 ? CheckVerdict::ViolationFound : CheckVerdict::NoViolationFound;
  return out;
}

PropertyCheck check_bound_deviation(const DiskFunction& f, DeviationMode mode, double threshold,
                                    const GridSpec& grid) {
  PropertyCheck out;
  // Label by the conclusion this deviation threshold carries.
  if (threshold < 1.0)
    out.property = {PropertyRegion::Kind::StarlikeDisk, Region::FullDisk};
  else if (mode == DeviationMode::FOverZMinusOne)
    out.property = {PropertyRegion::Kind::StarlikeHalf, Region::HalfDisk};
  else
    out.property = {PropertyRegion::Kind::ConvexHalf, Region::HalfDisk};
  grid.require_valid();
  out.grid = grid;
  double slack = 0.0;
  const auto ext = grid_max(grid, 0.0, [&](cplx z) {
    if (mode == DeviationMode::FOverZMinusOne) {
      const double err = f.value_err() / std::abs(z);
      if (err > slack) slack = err;
      return std::abs(f.value(z) / z - 1.0);
    }
    if (f.deriv_err() > slack) slack = f.deriv_err();
    return std::abs(f.deriv(z) - 1.0);
  });
  out.extremal_value = ext.value;
  out.extremal_point = ext.where;
  out.margin = threshold - ext.value - slack;
  out.verdict = out.margin < 0.0 ? CheckVerdict::ViolationFound : CheckVerdict::NoViolationFound;
  return out;
}

bool check_convex_decreasing(const SequenceSpec& seq) {
  for (int k = 1; k + 2 <= seq.length; ++k) {
    const double d1 = seq.gamma(k + 1) - seq.gamma(k);
    const double d2 = seq.gamma(k + 2) - seq.gamma(k + 1);
    if (!(d2 <= 0.0 && d2 >= d1)) return false;
  }
  return true;
}

PropertyCheck check_conclusion(const PropertyRegion& concl, const WrightParams& p,
                               const GridSpec* grid_override) {
  const GridSpec grid = grid_override ? *grid_override : default_grid(concl.region);
  const double rr = concl.region_radius();
  const auto f = make_normalized_wright(p, std::min(grid.r_max, rr - 1e-3) + 1e-9, 1e-12);
  switch (concl.kind) {
    case PropertyRegion::Kind::StarlikeDisk:
      return check_starlike(*f, 1.0, grid);
    case PropertyRegion::Kind::StarlikeOrder:
      return check_starlike(*f, 1.0, grid, concl.eta);
    case PropertyRegion::Kind::StarlikeHalf:
      return check_starlike(*f, 0.5, grid);
    case PropertyRegion::Kind::ConvexHalf:
      return check_convex(*f, 0.5, grid);
    case PropertyRegion::Kind::Ucv:
      return check_ucv(*f, grid);
    case PropertyRegion::Kind::SpClass:
      return check_sp(*f, grid);
    case PropertyRegion::Kind::CloseToConvex: {
      if (!concl.witness) throw std::invalid_argument("check_conclusion: missing witness");
      const auto g = make_normalized_wright(*concl.witness, grid.r_max, 1e-12);
      return check_close_to_convex(*f, *g, grid);
    }
    case PropertyRegion::Kind::HalfPlaneRe:
      return check_half_plane(p, grid);
  }
  throw std::logic_error("check_conclusion: unknown property kind");
}

}  // namespace wright
