#include "hypertile/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace hypertile {

namespace {

constexpr double pi = std::numbers::pi;

double cross(const KPoint& o, const KPoint& a, const KPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Proper or improper intersection of Klein chords ab and cd.
bool segments_intersect(const KPoint& a, const KPoint& b, const KPoint& c, const KPoint& d) {
  const double d1 = cross(c, d, a);
  const double d2 = cross(c, d, b);
  const double d3 = cross(a, b, c);
  const double d4 = cross(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  const auto on = [](const KPoint& p, const KPoint& q, const KPoint& r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
  };
  if (d1 == 0 && on(c, d, a)) return true;
  if (d2 == 0 && on(c, d, b)) return true;
  if (d3 == 0 && on(a, b, c)) return true;
  if (d4 == 0 && on(a, b, d)) return true;
  return false;
}

// Area of the geodesic triangle abc with the orientation sign of the
// Klein images. Degenerate triples give 0.
double signed_triangle_area(const HPoint& a, const HPoint& b, const HPoint& c) {
  const double x = dist(a, b), y = dist(b, c), z = dist(c, a);
  const double s = 0.5 * (x + y + z);
  const double fx = std::sinh(s - x), fy = std::sinh(s - y), fz = std::sinh(s - z);
  double num = 4.0 * std::sinh(s) * fx * fy * fz;
  if (!(num > 0.0)) return 0.0;  // collinear within rounding
  const double den = 1.0 + std::cosh(x) + std::cosh(y) + std::cosh(z);
  const double area = 2.0 * std::atan(std::sqrt(num) / den);
  const double sign = cross(to_klein(a), to_klein(b), to_klein(c));
  return sign >= 0.0 ? area : -area;
}

}  // namespace

Polygon::Polygon(std::vector<HPoint> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw InvalidPolygonError("polygon needs at least 3 vertices");
  for (const HPoint& v : vertices_) detail::require_in_disk(v, "Polygon");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == vertices_[(i + 1) % vertices_.size()]) {
      throw InvalidPolygonError("consecutive polygon vertices coincide");
    }
  }
}

int Polygon::orientation() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const KPoint a = to_klein(vertices_[i]);
    const KPoint b = to_klein(vertices_[(i + 1) % vertices_.size()]);
    sum += a.x * b.y - a.y * b.x;
  }
  return sum >= 0.0 ? 1 : -1;
}

Polygon Polygon::reversed() const {
  std::vector<HPoint> rev(vertices_.rbegin(), vertices_.rend());
  return Polygon(std::move(rev));
}

double Polygon::interior_angle(std::size_t i) const {
  const std::size_t n = vertices_.size();
  const HPoint& v = vertices_[i % n];
  const HPoint& prev = vertices_[(i + n - 1) % n];
  const HPoint& next = vertices_[(i + 1) % n];
  // For a counterclockwise boundary the interior lies in the sweep from
  // the outgoing ray to the incoming ray.
  return orientation() > 0 ? angle_at(v, next, prev) : angle_at(v, prev, next);
}

std::vector<double> Polygon::interior_angles() const {
  std::vector<double> out(vertices_.size());
  const int orient = orientation();
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const HPoint& v = vertices_[i];
    const HPoint& prev = vertices_[(i + n - 1) % n];
    const HPoint& next = vertices_[(i + 1) % n];
    out[i] = orient > 0 ? angle_at(v, next, prev) : angle_at(v, prev, next);
  }
  return out;
}

bool Polygon::is_simple() const {
  const std::size_t n = vertices_.size();
  std::vector<KPoint> k(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = to_klein(vertices_[i]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t i2 = (i + 1) % n, j2 = (j + 1) % n;
      if (i == j || i2 == j || j2 == i) continue;  // adjacent edges share a vertex
      if (segments_intersect(k[i], k[i2], k[j], k[j2])) return false;
    }
  }
  return true;
}

double area_gauss_bonnet(const Polygon& p) {
  if (!p.is_simple()) throw InvalidPolygonError("area_gauss_bonnet: self-intersecting boundary");
  const std::vector<double> angles = p.interior_angles();
  const double sum = std::accumulate(angles.begin(), angles.end(), 0.0);
  const double area = (static_cast<double>(p.size()) - 2.0) * pi - sum;
  if (!(area > 0.0)) throw DegeneratePolygonError("area_gauss_bonnet: nonpositive area");
  return area;
}

double perimeter(const Polygon& p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += dist(p.vertex(i), p.vertex(i + 1));
  return sum;
}

double signed_area(const std::vector<HPoint>& vertices) {
  const std::size_t n = vertices.size();
  const HPoint origin{0.0, 0.0};
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += signed_triangle_area(origin, vertices[i], vertices[(i + 1) % n]);
  }
  return sum;
}

Polygon realize_regular(int n, double theta) {
  if (n < 3) throw DomainError("realize_regular: integer side count >= 3 required");
  const double limit = (n - 2.0) * pi / n;
  if (!(theta > 0.0) || !(theta < limit)) {
    throw DomainError("realize_regular: interior angle outside (0, (n-2)pi/n)");
  }
  // Circumradius from the right triangle cut by the apothem:
  // cosh R = cot(pi/n) cot(theta/2).
  const double coshR = 1.0 / (std::tan(pi / n) * std::tan(theta / 2.0));
  const double rho = std::tanh(detail::acosh1p(coshR - 1.0) / 2.0);
  std::vector<HPoint> vs(n);
  for (int j = 0; j < n; ++j) {
    const double phi = 2.0 * pi * j / n;
    vs[j] = {rho * std::cos(phi), rho * std::sin(phi)};
  }
  return Polygon(std::move(vs));
}

Polygon convex_hull(const std::vector<HPoint>& points) {
  if (points.size() < 3) {
    std::vector<std::size_t> witness(points.size());
    std::iota(witness.begin(), witness.end(), 0);
    throw DegenerateHullError("convex_hull: fewer than 3 points", std::move(witness));
  }
  struct Entry {
    KPoint k;
    std::size_t idx;
  };
  std::vector<Entry> pts(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) pts[i] = {to_klein(points[i]), i};
  std::sort(pts.begin(), pts.end(), [](const Entry& a, const Entry& b) {
    return a.k.x < b.k.x || (a.k.x == b.k.x && a.k.y < b.k.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Entry& a, const Entry& b) {
                          return a.k.x == b.k.x && a.k.y == b.k.y;
                        }),
            pts.end());

  // Andrew monotone chain, strict turns only, so collinear interior
  // points are dropped and the hull has the minimal vertex count.
  const auto build = [&](auto begin, auto end) {
    std::vector<Entry> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             cross(chain[chain.size() - 2].k, chain[chain.size() - 1].k, it->k) <= 0.0) {
        chain.pop_back();
      }
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<Entry> lower = build(pts.begin(), pts.end());
  std::vector<Entry> upper = build(pts.rbegin(), pts.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());

  if (lower.size() < 3) {
    std::vector<std::size_t> witness;
    for (const Entry& e : lower) witness.push_back(e.idx);
    if (witness.empty() && !pts.empty()) witness.push_back(pts.front().idx);
    throw DegenerateHullError("convex_hull: collapsed to fewer than 3 extreme points",
                              std::move(witness));
  }
  std::vector<HPoint> hull;
  hull.reserve(lower.size());
  for (const Entry& e : lower) hull.push_back(points[e.idx]);
  return Polygon(std::move(hull));
}

Polygon reduce_equivalent(const Polygon& p) {
  const std::vector<double> angles = p.interior_angles();
  std::vector<HPoint> kept;
  kept.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (std::abs(angles[i] - pi) > eps_angle) kept.push_back(p.vertex(i));
  }
  if (kept.size() == p.size()) return p;
  if (kept.size() < 3) throw DegeneratePolygonError("reduce_equivalent: polygon collapsed");
  return Polygon(std::move(kept));
}

bool convex_contains(const Polygon& hull, const HPoint& q, double tol) {
  const KPoint kq = to_klein(q);
  const int orient = hull.orientation();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const KPoint a = to_klein(hull.vertex(i));
    const KPoint b = to_klein(hull.vertex(i + 1));
    const double c = cross(a, b, kq) * orient;
    if (c < -tol) return false;
  }
  return true;
}

}  // namespace hypertile
