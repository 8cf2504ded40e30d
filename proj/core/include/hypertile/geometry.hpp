#pragma once

#include <complex>
#include <cstdint>

#include "hypertile/constants.hpp"
#include "hypertile/errors.hpp"

namespace hypertile {

/// A point of the hyperbolic plane in Poincare-disk coordinates
/// (unit disk, curvature -1). Invariant: x^2 + y^2 < 1.
struct HPoint {
  double x = 0.0;
  double y = 0.0;

  double norm2() const { return x * x + y * y; }
  std::complex<double> c() const { return {x, y}; }
  static HPoint from(std::complex<double> z) { return {z.real(), z.imag()}; }

  friend bool operator==(const HPoint&, const HPoint&) = default;
};

/// A point in Klein (projective) coordinates, where hyperbolic geodesics
/// are Euclidean chords of the unit disk.
struct KPoint {
  double x = 0.0;
  double y = 0.0;
};

struct GeodesicSegment {
  HPoint a;
  HPoint b;
  double length() const;
};

/// Hyperbolic distance between two disk points.
/// Throws DomainError if either point is on or outside the unit circle.
double dist(const HPoint& p, const HPoint& q);

/// Angle at v between the geodesic rays v->a and v->b, measured
/// counterclockwise from the ray v->a. Result in [0, 2*pi).
/// Throws DomainError if a or b coincides with v.
double angle_at(const HPoint& v, const HPoint& a, const HPoint& b);

/// Disk <-> Klein model conversion: k = 2p/(1+|p|^2).
KPoint to_klein(const HPoint& p);
HPoint from_klein(const KPoint& k);

/// Orientation-preserving Moebius transformation of the disk,
/// z -> (a z + b)/(conj(b) z + conj(a)) with |a|^2 - |b|^2 = 1,
/// optionally preceded by complex conjugation (reflect flag).
class Isometry {
 public:
  Isometry() = default;

  static Isometry identity() { return {}; }
  /// Rotation about the origin by phi.
  static Isometry rotation(double phi);
  /// The translation along a geodesic through the origin taking 0 to w.
  static Isometry translation(const HPoint& w);
  /// Reflection in the diameter at angle phi to the x-axis.
  static Isometry diameter_reflection(double phi);
  /// Reflection in the geodesic through p and q (diameter or circle
  /// orthogonal to the unit circle). Throws DomainError if p == q.
  static Isometry geodesic_reflection(const HPoint& p, const HPoint& q);

  HPoint operator()(const HPoint& p) const;
  Isometry compose(const Isometry& inner) const;  // *this after inner
  Isometry inverse() const;

  bool reflecting() const { return reflect_; }
  std::complex<double> a() const { return a_; }
  std::complex<double> b() const { return b_; }

 private:
  Isometry(std::complex<double> a, std::complex<double> b, bool reflect);

  std::complex<double> a_{1.0, 0.0};
  std::complex<double> b_{0.0, 0.0};
  bool reflect_ = false;
};

inline HPoint apply(const Isometry& g, const HPoint& p) { return g(p); }

/// Center and Euclidean radius of the circle carrying the geodesic
/// through p and q. Returns false when the geodesic is a diameter
/// (then dir_angle is set to the diameter's angle instead).
struct GeodesicCircle {
  bool is_diameter = false;
  double cx = 0.0, cy = 0.0, r = 0.0;  // valid when !is_diameter
  double dir_angle = 0.0;              // valid when is_diameter
};
GeodesicCircle geodesic_circle(const HPoint& p, const HPoint& q);

/// Hyperbolic midpoint of the segment pq.
HPoint midpoint(const HPoint& p, const HPoint& q);

namespace detail {
/// acosh(1+u) for u >= 0 without cancellation near u = 0.
double acosh1p(double u);
/// Validates |p| < 1; throws DomainError otherwise.
void require_in_disk(const HPoint& p, const char* who);
}  // namespace detail

}  // namespace hypertile
