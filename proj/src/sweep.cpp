#include "wright/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace wright {

namespace {

FamilyPreset preset_at(const SweepSpec& s, double v) {
  FamilyPreset f;
  auto fixed_or = [&](const char* key, double dflt) {
    auto it = s.fixed.find(key);
    return it == s.fixed.end() ? dflt : it->second;
  };
  switch (s.family) {
    case SweepFamily::ConfluentF:
      f.kind = FamilyPreset::Kind::ConfluentF;
      f.b = s.varying == "b" ? v : fixed_or("b", 1.0);
      break;
    case SweepFamily::Bessel:
      f.kind = FamilyPreset::Kind::Bessel;
      f.beta = s.varying == "beta" ? v : fixed_or("beta", 1.0);
      break;
    case SweepFamily::TwoParam:
      f.kind = FamilyPreset::Kind::TwoParam;
      f.b = s.varying == "b" ? v : fixed_or("b", 1.0);
      f.nu = s.varying == "nu" ? v : fixed_or("nu", 1.0);
      break;
    case SweepFamily::FourParam:
      throw std::logic_error("preset_at: four-parameter sweeps use all_criteria directly");
  }
  return f;
}

WrightParams four_param_at(const SweepSpec& s, double v) {
  auto fixed_or = [&](const char* key, double dflt) {
    auto it = s.fixed.find(key);
    return it == s.fixed.end() ? dflt : it->second;
  };
  WrightParams p{fixed_or("mu", 1.0), fixed_or("a", 1.0), fixed_or("nu", 1.0), fixed_or("b", 1.0)};
  if (s.varying == "mu") p.mu = v;
  if (s.varying == "a") p.a = v;
  if (s.varying == "nu") p.nu = v;
  if (s.varying == "b") p.b = v;
  return p;
}

}  // namespace

void SweepSpec::require_valid() const {
  if (!(lo < hi)) throw std::domain_error("SweepSpec: lo must be < hi");
  if (steps < 2) throw std::domain_error("SweepSpec: steps must be >= 2");
  if (varying.empty()) throw std::domain_error("SweepSpec: varying parameter required");
}

double boundary_bisect(const std::function<bool(double)>& verdict, double lo, double hi,
                       double tol) {
  bool vlo = verdict(lo);
  bool vhi = verdict(hi);
  if (vlo == vhi) throw std::domain_error("boundary_bisect: verdict equal at both bracket ends");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (verdict(mid) == vlo)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

SweepResult run_sweep(const SweepSpec& spec) {
  spec.require_valid();
  SweepResult out;
  out.spec = spec;

  auto reports_at = [&](double v) -> std::vector<CriterionReport> {
    std::vector<CriterionReport> reps = spec.family == SweepFamily::FourParam
                                            ? all_criteria(four_param_at(spec, v))
                                            : family_presets(preset_at(spec, v));
    if (!spec.criterion_ids.empty()) {
      std::vector<CriterionReport> kept;
      for (auto& r : reps)
        if (std::find(spec.criterion_ids.begin(), spec.criterion_ids.end(), r.id) !=
            spec.criterion_ids.end())
          kept.push_back(std::move(r));
      reps = std::move(kept);
    }
    return reps;
  };

  std::vector<double> values(spec.steps);
  for (int i = 0; i < spec.steps; ++i)
    values[i] = spec.lo + (spec.hi - spec.lo) * i / (spec.steps - 1);

  std::vector<std::string> ids;
  for (double v : values) {
    const auto reps = reports_at(v);
    SweepRow row;
    row.value = v;
    for (const auto& r : reps) {
      row.verdicts.emplace_back(r.id, r.established());
      if (spec.with_oracle && r.established()) {
        const PropertyCheck chk = check_conclusion(r.conclusion, r.params);
        row.margins.emplace_back(r.id, chk.margin);
      }
    }
    if (ids.empty())
      for (const auto& [id, v2] : row.verdicts) ids.push_back(id);
    out.rows.push_back(std::move(row));
  }

  // Verdict patterns must be interval-shaped in the varying parameter
  // (at most one contiguous Established run); bisect each transition.
  for (std::size_t ci = 0; ci < ids.size(); ++ci) {
    int transitions = 0;
    for (int i = 0; i + 1 < spec.steps; ++i)
      if (out.rows[i].verdicts[ci].second != out.rows[i + 1].verdicts[ci].second) ++transitions;
    if (transitions > 2)
      throw std::runtime_error("run_sweep: verdict for " + ids[ci] +
                               " is not interval-shaped across the sweep");
    auto verdict_fn = [&](double v) {
      const auto reps = reports_at(v);
      for (const auto& r : reps)
        if (r.id == ids[ci]) return r.established();
      return false;
    };
    for (int i = 0; i + 1 < spec.steps; ++i) {
      const bool va = out.rows[i].verdicts[ci].second;
      const bool vb = out.rows[i + 1].verdicts[ci].second;
      if (va == vb) continue;
      SweepBoundary bd;
      bd.criterion = ids[ci];
      bd.location = boundary_bisect(verdict_fn, values[i], values[i + 1], 1e-8);
      bd.rising = vb;
      out.boundaries.push_back(bd);
    }
  }
  return out;
}

std::string render_table(const SweepResult& r) {
  std::ostringstream os;
  char buf[64];
  os << "# sweep: varying " << r.spec.varying << " over [" << r.spec.lo << ", " << r.spec.hi
     << "] in " << r.spec.steps << " steps\n";
  if (!r.rows.empty()) {
    // cell text first, then pad every column to its widest entry
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"value"};
    for (const auto& [id, v] : r.rows.front().verdicts) head.push_back(id);
    cells.push_back(head);
    for (const auto& row : r.rows) {
      std::vector<std::string> line;
      std::snprintf(buf, sizeof buf, "%.6f", row.value);
      line.emplace_back(buf);
      for (const auto& [id, est] : row.verdicts) {
        std::string cell = est ? "Established" : "-";
        for (const auto& [mid, m] : row.margins)
          if (mid == id) {
            std::snprintf(buf, sizeof buf, " (margin %.3e)", m);
            cell += buf;
          }
        line.push_back(std::move(cell));
      }
      cells.push_back(std::move(line));
    }
    std::vector<std::size_t> width(cells.front().size(), 0);
    for (const auto& line : cells)
      for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        os << line[i];
        if (i + 1 < line.size()) os << std::string(width[i] - line[i].size() + 2, ' ');
      }
      os << "\n";
    }
  }
  for (const auto& b : r.boundaries) {
    std::snprintf(buf, sizeof buf, "%.6f", b.location);
    os << "boundary " << b.criterion << " at " << buf << " (" << (b.rising ? "rising" : "falling")
       << ")\n";
  }
  return os.str();
}

std::string render_json(const SweepResult& r) {
  nlohmann::ordered_json j;
  switch (r.spec.family) {
    case SweepFamily::FourParam: j["family"] = "fourparam"; break;
    case SweepFamily::ConfluentF: j["family"] = "confluent"; break;
    case SweepFamily::Bessel: j["family"] = "bessel"; break;
    case SweepFamily::TwoParam: j["family"] = "twoparam"; break;
  }
  j["varying"] = r.spec.varying;
  j["lo"] = r.spec.lo;
  j["hi"] = r.spec.hi;
  j["steps"] = r.spec.steps;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json jr;
    jr["value"] = row.value;
    jr["verdicts"] = nlohmann::ordered_json::object();
    for (const auto& [id, est] : row.verdicts) jr["verdicts"][id] = est;
    if (!row.margins.empty()) {
      jr["margins"] = nlohmann::ordered_json::object();
      for (const auto& [id, m] : row.margins) jr["margins"][id] = m;
    }
    j["rows"].push_back(std::move(jr));
  }
  j["boundaries"] = nlohmann::ordered_json::array();
  for (const auto& b : r.boundaries) {
    j["boundaries"].push_back(
        {{"criterion", b.criterion}, {"location", b.location}, {"rising", b.rising}});
  }
  return j.dump(2) + "\n";
}

}  // namespace wright
