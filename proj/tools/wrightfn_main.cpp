// Command-line frontend: series evaluation, criterion checks, disk-sampling
// verification, partial-sum zero analysis, parameter sweeps, and SVG plots
// of circle/ray images.
//
// Exit codes: 0 success, 1 no criterion established (criteria subcommand),
// 2 invalid parameters, 3 I/O failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wright/criteria.hpp"
#include "wright/disk_check.hpp"
#include "wright/polyzeros.hpp"
#include "wright/series.hpp"
#include "wright/svg_plot.hpp"
#include "wright/sweep.hpp"

namespace {

using nlohmann::ordered_json;
using namespace wright;

// Complex literals of the form "a", "a+bi", "a-bi", "bi".
cplx parse_complex_inner(const std::string& text) {
  std::string s = text;
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) throw std::domain_error("empty complex literal");
  if (s.back() == 'i' || s.back() == 'I') {
    s.pop_back();
    // split at the last +/- that is not an exponent sign or leading sign
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
      if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    if (split == std::string::npos) {
      if (s.empty() || s == "+" || s == "-") s += "1";
      return {0.0, std::stod(s)};
    }
    std::string im = s.substr(split);
    if (im == "+" || im == "-") im += "1";
    return {std::stod(s.substr(0, split)), std::stod(im)};
  }
  return {std::stod(s), 0.0};
}

cplx parse_complex(const std::string& text) {
  try {
    return parse_complex_inner(text);
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw std::domain_error("invalid complex literal: " + text + " (expected a+bi)");
  }
}

std::string fmt_complex(cplx z) {
  std::ostringstream os;
  os.precision(15);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

ordered_json json_complex(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

ordered_json json_report(const CriterionReport& r) {
  ordered_json j;
  j["id"] = r.id;
  j["conclusion"] = r.conclusion.describe();
  j["verdict"] = r.established() ? "Established" : "NotEstablished";
  j["params"] = {{"mu", r.params.mu}, {"a", r.params.a}, {"nu", r.params.nu}, {"b", r.params.b}};
  j["hypotheses"] = ordered_json::array();
  for (const auto& h : r.hypotheses)
    j["hypotheses"].push_back({{"name", h.name}, {"holds", h.holds}, {"lhs", h.lhs}, {"rhs", h.rhs}});
  if (!r.auxiliary.empty()) {
    j["auxiliary"] = ordered_json::array();
    for (const auto& h : r.auxiliary)
      j["auxiliary"].push_back({{"name", h.name}, {"holds", h.holds}, {"lhs", h.lhs}, {"rhs", h.rhs}});
  }
  j["note"] = r.note;
  return j;
}

ordered_json json_check(const PropertyCheck& c) {
  ordered_json j;
  j["property"] = c.property.describe();
  j["grid"] = {{"r_max", c.grid.r_max},
               {"n_radii", c.grid.n_radii},
               {"n_angles", c.grid.n_angles},
               {"spacing", c.grid.spacing == RadialSpacing::BoundaryClustered ? "boundary_clustered"
                                                                              : "uniform"}};
  j["extremal_value"] = c.extremal_value;
  j["extremal_point"] = json_complex(c.extremal_point);
  j["margin"] = c.margin;
  j["verdict"] = c.ok() ? "NoViolationFound" : "ViolationFound";
  if (!c.diagnostic.empty()) j["diagnostic"] = c.diagnostic;
  return j;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::ios_base::failure("cannot open output path: " + out_path);
  os << text;
  if (!os) throw std::ios_base::failure("write failed: " + out_path);
}

void print_check(const PropertyCheck& c, bool as_json, const std::string& out) {
  if (as_json) {
    emit(json_check(c).dump(2) + "\n", out);
    return;
  }
  std::ostringstream os;
  os.precision(15);
  os << c.property.describe() << "\n  extremal value " << c.extremal_value << " at "
     << fmt_complex(c.extremal_point) << "\n  margin " << c.margin << "\n  verdict "
     << (c.ok() ? "NoViolationFound" : "ViolationFound") << "\n";
  if (!c.diagnostic.empty()) os << "  note: " << c.diagnostic << "\n";
  emit(os.str(), out);
}

struct FamilyArgs {
  std::string family = "four";
  double mu = 1, a = 1, nu = 1, b = 1;
  double beta = 1.5;
};

WrightParams params_of(const FamilyArgs& fa) {
  if (fa.family == "four") return {fa.mu, fa.a, fa.nu, fa.b};
  if (fa.family == "two") return preset_params({FamilyPreset::Kind::TwoParam, fa.b, 0, fa.nu});
  if (fa.family == "bessel") return preset_params({FamilyPreset::Kind::Bessel, 0, fa.beta, 1});
  if (fa.family == "confluent") return preset_params({FamilyPreset::Kind::ConfluentF, fa.b, 0, 1});
  throw std::domain_error("unknown family: " + fa.family);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wright and Fox-Wright function evaluation, geometric-property criteria, "
               "disk verification, partial-sum zeros, sweeps and plots"};
  app.require_subcommand(1);

  double tol = 1e-12;
  bool as_json = false;
  std::string out_path;
  int grid_radii = 64;
  int grid_angles = 256;
  double r_max = -1.0;  // negative = default for the region
  app.add_option("--tol", tol, "series tolerance")->capture_default_str();
  app.add_flag("--json", as_json, "machine-readable JSON output");
  app.add_option("--out", out_path, "write output to a file instead of stdout");
  app.add_option("--grid-radii", grid_radii, "radial grid count")->capture_default_str();
  app.add_option("--grid-angles", grid_angles, "angular grid count")->capture_default_str();
  app.add_option("--r-max", r_max, "sampling radius cap (defaults per region)");

  FamilyArgs fa;
  auto add_param_opts = [&](CLI::App* cmd) {
    cmd->add_option("--mu", fa.mu);
    cmd->add_option("--a", fa.a);
    cmd->add_option("--nu", fa.nu);
    cmd->add_option("--b", fa.b);
    cmd->add_option("--beta", fa.beta);
  };
  auto add_family_opts = [&](CLI::App* cmd) {
    cmd->add_option("--family", fa.family, "four | two | bessel | confluent | wright2 | foxwright")
        ->capture_default_str();
    add_param_opts(cmd);
  };

  // --- eval ---
  auto* eval = app.add_subcommand("eval", "evaluate a series with certified tail bound");
  std::string z_text = "0";
  bool raw = false;
  int deriv_order = 0;
  double w2_alpha = 1.0, w2_beta = 1.0;
  double fw_x = 1.0;
  std::vector<std::string> fw_upper, fw_lower;
  add_family_opts(eval);
  eval->add_option("--z", z_text, "complex point, e.g. 0.3+0.2i")->capture_default_str();
  eval->add_flag("--raw", raw, "evaluate the raw (unnormalized) series");
  eval->add_option("--deriv", deriv_order, "derivative order 0|1|2 of the normalized map");
  eval->add_option("--alpha", w2_alpha, "wright2 alpha");
  eval->add_option("--beta2", w2_beta, "wright2 beta");
  eval->add_option("--upper", fw_upper, "foxwright upper pair a,A (repeatable)");
  eval->add_option("--lower", fw_lower, "foxwright lower pair b,B (repeatable)");
  eval->add_option("--x", fw_x, "foxwright real argument");

  // --- criteria ---
  auto* crit = app.add_subcommand("criteria", "run every applicable sufficient condition");
  std::optional<double> eta_opt;
  double eta_val = 0.0;
  auto* eta_flag = crit->add_option("--eta", eta_val, "also check starlikeness of this order");
  add_family_opts(crit);

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "sample the disk for a property");
  std::string property = "starlike";
  double eta_verify = 0.0;
  double region_radius = -1.0;
  int partial_terms = -1;
  double dev_threshold = 1.0;
  std::string dev_mode = "f-over-z";
  verify->add_option("--property", property,
                     "starlike | convex | ucv | sp | close-to-convex | half-plane | deviation")
      ->capture_default_str();
  verify->add_option("--eta", eta_verify, "starlikeness order");
  verify->add_option("--region-radius", region_radius, "asserted region radius (1 or 0.5)");
  verify->add_option("--partial-terms", partial_terms, "half-plane check on an N-term partial sum");
  verify->add_option("--threshold", dev_threshold, "deviation threshold");
  verify->add_option("--mode", dev_mode, "deviation mode: f-over-z | f-prime");
  add_family_opts(verify);

  // --- zeros ---
  auto* zeros = app.add_subcommand("zeros", "roots of a partial-sum polynomial");
  int N = 8;
  std::string which = "raw";
  bool exterior = false;
  zeros->add_option("--N", N, "partial sum order")->capture_default_str();
  zeros->add_option("--which", which, "raw | normalized | qfactor")->capture_default_str();
  zeros->add_flag("--exterior", exterior, "run the exterior-of-disk verification");
  add_family_opts(zeros);

  // --- sweep ---
  auto* sweep = app.add_subcommand("sweep", "criterion verdicts over a parameter range");
  std::string sw_family = "twoparam";
  std::string varying = "nu";
  double lo = 0.5, hi = 1.2;
  int steps = 71;
  bool with_oracle = false;
  std::vector<std::string> only_ids;
  sweep->add_option("--family", sw_family, "fourparam | twoparam | bessel | confluent")
      ->capture_default_str();
  sweep->add_option("--vary", varying, "parameter name")->capture_default_str();
  sweep->add_option("--lo", lo)->capture_default_str();
  sweep->add_option("--hi", hi)->capture_default_str();
  sweep->add_option("--steps", steps)->capture_default_str();
  sweep->add_flag("--with-oracle", with_oracle, "attach oracle margins to Established rows");
  sweep->add_option("--criterion", only_ids, "restrict to these criterion ids");
  add_param_opts(sweep);

  // --- plot ---
  auto* plot = app.add_subcommand("plot", "SVG image of circles and rays under the map");
  double plot_radius = 1.0;
  int n_circles = 8, n_rays = 12, samples = 512;
  plot->add_option("--region-radius", plot_radius)->capture_default_str();
  plot->add_option("--circles", n_circles)->capture_default_str();
  plot->add_option("--rays", n_rays)->capture_default_str();
  plot->add_option("--samples", samples)->capture_default_str();
  add_family_opts(plot);

  for (auto* sc : app.get_subcommands({})) sc->fallthrough();
  CLI11_PARSE(app, argc, argv);

  try {
    GridSpec grid;
    grid.n_radii = grid_radii;
    grid.n_angles = grid_angles;

    if (eval->parsed()) {
      const cplx z = parse_complex(z_text);
      SeriesValue sv;
      if (fa.family == "foxwright") {
        auto parse_pair = [](const std::string& s) -> std::pair<double, double> {
          const auto comma = s.find(',');
          if (comma == std::string::npos)
            throw std::domain_error("foxwright pair must look like a,A: " + s);
          return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
        };
        FoxWrightSpec fw;
        for (const auto& s : fw_upper) fw.upper.push_back(parse_pair(s));
        for (const auto& s : fw_lower) fw.lower.push_back(parse_pair(s));
        sv = eval_fox_wright(fw, fw_x, tol);
      } else if (fa.family == "wright2") {
        sv = eval_wright2({w2_alpha, w2_beta}, z, tol);
      } else if (fa.family == "bessel") {
        sv = bessel_normalized(fa.beta, z, tol);
      } else if (raw) {
        sv = eval_wright4(params_of(fa), z, tol);
      } else if (deriv_order > 0) {
        sv = eval_normalized_deriv(params_of(fa), z, deriv_order, tol);
      } else {
        sv = eval_normalized(params_of(fa), z, tol);
      }
      if (as_json) {
        ordered_json j;
        j["value"] = json_complex(sv.value);
        j["terms_used"] = sv.terms_used;
        j["tail_bound"] = sv.tail_bound;
        emit(j.dump(2) + "\n", out_path);
      } else {
        std::ostringstream os;
        os.precision(15);
        os << "value      " << fmt_complex(sv.value) << "\n"
           << "terms_used " << sv.terms_used << "\n"
           << "tail_bound " << sv.tail_bound << "\n";
        emit(os.str(), out_path);
      }
      return 0;
    }

    if (crit->parsed()) {
      if (eta_flag->count() > 0) eta_opt = eta_val;
      std::vector<CriterionReport> reports;
      if (fa.family == "confluent")
        reports = family_presets({FamilyPreset::Kind::ConfluentF, fa.b, 0, 1});
      else if (fa.family == "bessel")
        reports = family_presets({FamilyPreset::Kind::Bessel, 0, fa.beta, 1});
      else if (fa.family == "two")
        reports = family_presets({FamilyPreset::Kind::TwoParam, fa.b, 0, fa.nu});
      else
        reports = all_criteria(params_of(fa), eta_opt);

      bool any = false;
      for (const auto& r : reports) any = any || r.established();
      if (as_json) {
        ordered_json j;
        j["reports"] = ordered_json::array();
        for (const auto& r : reports) j["reports"].push_back(json_report(r));
        j["any_established"] = any;
        emit(j.dump(2) + "\n", out_path);
      } else {
        std::ostringstream os;
        os.precision(10);
        for (const auto& r : reports) {
          os << (r.established() ? "[Established]    " : "[NotEstablished] ") << r.id << " — "
             << r.conclusion.describe() << "\n";
          for (const auto& h : r.hypotheses)
            os << "    " << (h.holds ? "ok  " : "FAIL") << "  " << h.name << "  (lhs " << h.lhs
               << ", rhs " << h.rhs << ")\n";
        }
        emit(os.str(), out_path);
      }
      return any ? 0 : 1;
    }

    if (verify->parsed()) {
      const WrightParams p = params_of(fa);
      const double rr = region_radius > 0 ? region_radius : 1.0;
      if (r_max > 0) grid.r_max = r_max;
      else grid.r_max = rr - 1e-3;
      PropertyCheck chk;
      if (property == "half-plane") {
        chk = check_half_plane(p, grid, partial_terms);
      } else {
        const double cap = std::min(grid.r_max, rr - 1e-3) + 1e-9;
        const auto f = fa.family == "bessel" ? make_bessel_normalized(fa.beta, cap, tol)
                                             : make_normalized_wright(p, cap, tol);
        if (property == "starlike")
          chk = check_starlike(*f, rr, grid, eta_verify);
        else if (property == "convex")
          chk = check_convex(*f, rr, grid);
        else if (property == "ucv")
          chk = check_ucv(*f, grid);
        else if (property == "sp")
          chk = check_sp(*f, grid);
        else if (property == "close-to-convex") {
          const auto g = make_normalized_wright(WrightParams{p.mu, p.a, 1.0, p.b}, grid.r_max, tol);
          chk = check_close_to_convex(*f, *g, grid);
        } else if (property == "deviation") {
          chk = check_bound_deviation(*f,
                                      dev_mode == "f-prime" ? DeviationMode::FPrimeMinusOne
                                                            : DeviationMode::FOverZMinusOne,
                                      dev_threshold, grid);
        } else {
          throw std::domain_error("unknown property: " + property);
        }
      }
      print_check(chk, as_json, out_path);
      return chk.ok() ? 0 : 1;
    }

    if (zeros->parsed()) {
      const WrightParams p = params_of(fa);
      PartialSumKind kind = PartialSumKind::RawPartialSum;
      if (which == "normalized") kind = PartialSumKind::NormalizedPartialSum;
      else if (which == "qfactor") kind = PartialSumKind::QFactor;
      else if (which != "raw") throw std::domain_error("unknown partial-sum kind: " + which);

      RootsReport rep;
      bool ext_ok = true;
      if (exterior) {
        const ExteriorReport er = verify_exterior(p, N, kind);
        rep = er.roots;
        ext_ok = er.exterior;
      } else {
        rep = find_roots(partial_sum_coeffs(p, N, kind));
      }
      if (as_json) {
        ordered_json j;
        j["roots"] = ordered_json::array();
        for (const auto& z : rep.roots) j["roots"].push_back(json_complex(z));
        j["zero_root_multiplicity"] = rep.zero_root_multiplicity;
        j["min_modulus"] = rep.min_modulus;
        j["kakeya_applicable"] = rep.kakeya_applicable;
        j["residual_max"] = rep.residual_max;
        if (exterior) j["exterior"] = ext_ok;
        emit(j.dump(2) + "\n", out_path);
      } else {
        std::ostringstream os;
        os.precision(15);
        for (const auto& z : rep.roots) os << fmt_complex(z) << "\n";
        if (rep.zero_root_multiplicity > 0)
          os << "zero root multiplicity " << rep.zero_root_multiplicity << "\n";
        os << "min_modulus " << rep.min_modulus << "\nkakeya_applicable "
           << (rep.kakeya_applicable ? "true" : "false") << "\nresidual_max " << rep.residual_max
           << "\n";
        if (exterior) os << "exterior " << (ext_ok ? "true" : "false") << "\n";
        emit(os.str(), out_path);
      }
      return (!exterior || ext_ok) ? 0 : 1;
    }

    if (sweep->parsed()) {
      SweepSpec spec;
      if (sw_family == "fourparam") spec.family = SweepFamily::FourParam;
      else if (sw_family == "twoparam") spec.family = SweepFamily::TwoParam;
      else if (sw_family == "bessel") spec.family = SweepFamily::Bessel;
      else if (sw_family == "confluent") spec.family = SweepFamily::ConfluentF;
      else throw std::domain_error("unknown sweep family: " + sw_family);
      spec.varying = varying;
      spec.lo = lo;
      spec.hi = hi;
      spec.steps = steps;
      spec.with_oracle = with_oracle;
      spec.criterion_ids = only_ids;
      spec.fixed = {{"mu", fa.mu}, {"a", fa.a}, {"nu", fa.nu}, {"b", fa.b}, {"beta", fa.beta}};
      const SweepResult res = run_sweep(spec);
      emit(as_json ? render_json(res) : render_table(res), out_path);
      return 0;
    }

    if (plot->parsed()) {
      PlotSpec ps;
      ps.region_radius = plot_radius;
      ps.n_circles = n_circles;
      ps.n_rays = n_rays;
      ps.samples_per_curve = samples;
      const auto f = fa.family == "bessel"
                         ? make_bessel_normalized(fa.beta, ps.region_radius, tol)
                         : make_normalized_wright(params_of(fa), ps.region_radius, tol);
      emit(render_plot_svg(*f, ps), out_path);
      return 0;
    }
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
