#pragma once

#include <cstddef>
#include <vector>

#include "hypertile/formulas.hpp"
#include "hypertile/geometry.hpp"

namespace hypertile {

/// An oriented cyclic list of disk points joined by geodesic segments.
/// Consecutive vertices must be distinct; the closing edge from the last
/// vertex back to the first is implicit.
class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<HPoint> vertices);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<HPoint>& vertices() const { return vertices_; }
  const HPoint& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  /// +1 for counterclockwise boundaries, -1 for clockwise.
  /// Determined by the sign of the Klein-model shoelace sum.
  int orientation() const;
  Polygon reversed() const;

  /// Interior angle at vertex i, measured on the side the orientation
  /// marks as inside. Reflex vertices give values in (pi, 2*pi).
  double interior_angle(std::size_t i) const;
  std::vector<double> interior_angles() const;

  /// True when no two non-adjacent boundary edges intersect (chord test
  /// in the Klein model, O(n^2)).
  bool is_simple() const;

 private:
  std::vector<HPoint> vertices_;
};

/// Gauss-Bonnet area (n-2)*pi - sum of interior angles.
/// Throws InvalidPolygonError for self-intersecting boundaries and
/// DegeneratePolygonError when the measured area is nonpositive.
double area_gauss_bonnet(const Polygon& p);

/// Sum of geodesic edge lengths.
double perimeter(const Polygon& p);

/// Signed area via the geodesic fan decomposition from the origin;
/// positive for counterclockwise simple polygons. Well defined (and
/// continuous) even for self-intersecting vertex chains, which makes it
/// usable inside penalty-based optimization.
double signed_area(const std::vector<HPoint>& vertices);

/// The regular n-gon with interior angle theta, centered at the origin
/// with the first vertex on the positive x-axis, counterclockwise.
/// Requires integer n >= 3 and theta strictly inside (0, (n-2)pi/n).
Polygon realize_regular(int n, double theta);

/// Convex hull of a point set, computed as a Euclidean hull in the Klein
/// model. Returns the counterclockwise hull with the minimal number of
/// vertices. Throws DegenerateHullError (with the extreme points as a
/// witness) when fewer than 3 extreme points remain. Points coming from
/// a quotient surface must all be supplied in one consistent lift; the
/// choice of lift is the caller's.
Polygon convex_hull(const std::vector<HPoint>& points);

/// Removes every vertex whose interior angle is within eps_angle of pi.
/// Area and perimeter are unchanged; idempotent.
Polygon reduce_equivalent(const Polygon& p);

/// True when q lies inside or on the (convex) polygon; Klein-model test.
bool convex_contains(const Polygon& hull, const HPoint& q, double tol = 1e-12);

}  // namespace hypertile
