#pragma once

#include <string>

#include "wright/disk_function.hpp"

namespace wright {

/// Image of concentric circles and radial segments under an analytic map,
/// rendered as SVG 1.1 polylines. Output is deterministic for a fixed spec.
struct PlotSpec {
  double region_radius = 1.0;  // in (0, 1]
  int n_circles = 8;
  int n_rays = 12;
  int samples_per_curve = 512;

  void require_valid() const;
};

std::string render_plot_svg(const DiskFunction& f, const PlotSpec& spec);

}  // namespace wright
