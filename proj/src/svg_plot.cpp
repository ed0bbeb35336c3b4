#include "wright/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

namespace wright {

namespace {

struct Curve {
  std::vector<cplx> pts;
  const char* color;
};

std::string fmt(double v) {
  char buf[40];
  // Fixed decimal formatting keeps byte-identical output across runs.
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);  // normalize -0
  return buf;
}

}  // namespace

void PlotSpec::require_valid() const {
  if (!(region_radius > 0.0 && region_radius <= 1.0))
    throw std::domain_error("PlotSpec: region radius must be in (0, 1]");
  if (n_circles < 2 || n_rays < 2) throw std::domain_error("PlotSpec: counts must be >= 2");
  if (samples_per_curve < 8) throw std::domain_error("PlotSpec: samples_per_curve must be >= 8");
}

std::string render_plot_svg(const DiskFunction& f, const PlotSpec& spec) {
  spec.require_valid();
  std::vector<Curve> curves;

  for (int i = 1; i <= spec.n_circles; ++i) {
    const double r = spec.region_radius * i / spec.n_circles;
    Curve c;
    c.color = "#1f77b4";
    c.pts.reserve(spec.samples_per_curve + 1);
    for (int s = 0; s <= spec.samples_per_curve; ++s) {
      const double th = 2.0 * std::numbers::pi * s / spec.samples_per_curve;
      c.pts.push_back(f.value(std::polar(r, th)));
    }
    curves.push_back(std::move(c));
  }
  for (int j = 0; j < spec.n_rays; ++j) {
    const double th = 2.0 * std::numbers::pi * j / spec.n_rays;
    Curve c;
    c.color = "#d62728";
    c.pts.reserve(spec.samples_per_curve + 1);
    for (int s = 0; s <= spec.samples_per_curve; ++s) {
      const double t = spec.region_radius * s / spec.samples_per_curve;
      c.pts.push_back(f.value(std::polar(t, th)));
    }
    curves.push_back(std::move(c));
  }

  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& c : curves)
    for (const auto& p : c.pts) {
      if (first) {
        xmin = xmax = p.real();
        ymin = ymax = p.imag();
        first = false;
      }
      xmin = std::min(xmin, p.real());
      xmax = std::max(xmax, p.real());
      ymin = std::min(ymin, p.imag());
      ymax = std::max(ymax, p.imag());
    }
  const double pad = 0.05 * std::max(xmax - xmin, ymax - ymin) + 1e-9;
  xmin -= pad;
  xmax += pad;
  ymin -= pad;
  ymax += pad;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
     << "viewBox=\"" << fmt(xmin) << " " << fmt(ymin) << " " << fmt(xmax - xmin) << " "
     << fmt(ymax - ymin) << "\">\n";
  // flip the y axis so the upper half plane renders on top
  os << "<g transform=\"translate(0," << fmt(ymin + ymax) << ") scale(1,-1)\">\n";
  const double stroke = 0.004 * std::max(xmax - xmin, ymax - ymin);
  for (const auto& c : curves) {
    os << "<polyline fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"" << fmt(stroke)
       << "\" points=\"";
    for (std::size_t i = 0; i < c.pts.size(); ++i) {
      if (i) os << ' ';
      os << fmt(c.pts[i].real()) << ',' << fmt(c.pts[i].imag());
    }
    os << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace wright
