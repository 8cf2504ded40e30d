#include "hypertile/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace hypertile {

namespace {

constexpr double pi = std::numbers::pi;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

// SVG path command for the geodesic from p to q, in viewport units.
// Arc radii and sweep direction come from the orthogonal circle; the
// hyperbolic midpoint picks the correct of the two candidate arcs.
std::string edge_path(const SvgTransform& tr, const HPoint& p, const HPoint& q) {
  const GeodesicCircle gc = geodesic_circle(p, q);
  std::ostringstream out;
  if (gc.is_diameter) {
    out << "L " << fmt(tr.tx(q.x)) << ' ' << fmt(tr.ty(q.y));
    return out.str();
  }
  const HPoint m = midpoint(p, q);
  const double cx = tr.tx(gc.cx), cy = tr.ty(gc.cy);
  const double ap = std::atan2(tr.ty(p.y) - cy, tr.tx(p.x) - cx);
  const double aq = std::atan2(tr.ty(q.y) - cy, tr.tx(q.x) - cx);
  const double am = std::atan2(tr.ty(m.y) - cy, tr.tx(m.x) - cx);
  const auto norm = [](double a) { return a < 0.0 ? a + 2.0 * pi : a; };
  const double dq = norm(aq - ap), dm = norm(am - ap);
  const int sweep = dm < dq ? 1 : 0;  // increasing angle in y-down coords
  const double r = tr.radius * gc.r;
  out << "A " << fmt(r) << ' ' << fmt(r) << " 0 0 " << sweep << ' ' << fmt(tr.tx(q.x)) << ' '
      << fmt(tr.ty(q.y));
  return out.str();
}

void face_path(std::ostringstream& out, const SvgTransform& tr, const Polygon& poly,
               const char* style) {
  const std::size_t n = poly.size();
  out << "<path d=\"M " << fmt(tr.tx(poly.vertex(0).x)) << ' ' << fmt(tr.ty(poly.vertex(0).y));
  for (std::size_t i = 0; i < n; ++i) {
    out << ' ' << edge_path(tr, poly.vertex(i), poly.vertex(i + 1));
  }
  out << " Z\" " << style << "/>\n";
}

std::string document(const std::string& body) {
  const SvgTransform tr;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << tr.size
      << "\" height=\"" << tr.size << "\" viewBox=\"0 0 " << tr.size << ' ' << tr.size << "\">\n"
      << "<circle cx=\"" << tr.size / 2 << "\" cy=\"" << tr.size / 2 << "\" r=\"" << tr.radius
      << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n"
      << body << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_svg(const TilingGraph& t) {
  const SvgTransform tr;
  std::ostringstream body;
  for (const TilingFace& f : t.faces) {
    if (!f.realization) continue;
    face_path(body, tr, *f.realization,
              "fill=\"#cfe3ff\" fill-opacity=\"0.55\" stroke=\"#1a3f7a\" stroke-width=\"1.2\"");
  }
  return document(body.str());
}

std::string render_svg(const Polygon& p) {
  const SvgTransform tr;
  std::ostringstream body;
  face_path(body, tr, p, "fill=\"#cfe3ff\" fill-opacity=\"0.55\" stroke=\"#1a3f7a\" stroke-width=\"1.2\"");
  return document(body.str());
}

}  // namespace hypertile
