#pragma once

#include <string>

#include "hypertile/tiling.hpp"

namespace hypertile {

/// Disk-to-viewport map for SVG output: 1000x1000 user units, unit disk
/// drawn with radius 480 centered at (500,500), y axis flipped.
struct SvgTransform {
  double size = 1000.0;
  double radius = 480.0;
  double tx(double x) const { return size / 2.0 + radius * x; }
  double ty(double y) const { return size / 2.0 - radius * y; }
};

/// Renders the realized faces of a tiling as SVG 1.1. Geodesic edges are
/// drawn as arcs of circles orthogonal to the unit circle (diameters as
/// line segments).
std::string render_svg(const TilingGraph& t);

std::string render_svg(const Polygon& p);

}  // namespace hypertile
