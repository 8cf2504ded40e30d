#include "hypertile/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hypertile {

namespace detail {

double acosh1p(double u) {
  // acosh(1+u) = log1p(u + sqrt(u*(2+u))), accurate for all u >= 0.
  if (u < 0.0) {
    if (u > -4.0 * std::numeric_limits<double>::epsilon()) u = 0.0;
    else throw DomainError("acosh argument below 1");
  }
  return std::log1p(u + std::sqrt(u * (2.0 + u)));
}

void require_in_disk(const HPoint& p, const char* who) {
  if (!(p.norm2() < 1.0)) {
    throw DomainError(std::string(who) + ": point on or outside the unit circle");
  }
}

}  // namespace detail

double dist(const HPoint& p, const HPoint& q) {
  detail::require_in_disk(p, "dist");
  detail::require_in_disk(q, "dist");
  const std::complex<double> zp = p.c(), zq = q.c();
  const double num = std::abs(zq - zp);
  const double den = std::abs(1.0 - std::conj(zp) * zq);
  // |(q-p)/(1-conj(p)q)| < 1 for interior points; atanh keeps full
  // relative precision for nearby points.
  return 2.0 * std::atanh(num / den);
}

double GeodesicSegment::length() const { return dist(a, b); }

double angle_at(const HPoint& v, const HPoint& a, const HPoint& b) {
  detail::require_in_disk(v, "angle_at");
  detail::require_in_disk(a, "angle_at");
  detail::require_in_disk(b, "angle_at");
  if (a == v || b == v) throw DomainError("angle_at: ray endpoint coincides with vertex");
  // Translate v to the origin; rays from the origin are Euclidean rays
  // and the disk model is conformal there.
  const std::complex<double> zv = v.c();
  const auto t = [&](std::complex<double> z) { return (z - zv) / (1.0 - std::conj(zv) * z); };
  const double alpha = std::arg(t(a.c()));
  const double beta = std::arg(t(b.c()));
  double d = beta - alpha;
  const double two_pi = 2.0 * std::numbers::pi;
  d = std::fmod(d, two_pi);
  if (d < 0.0) d += two_pi;
  return d;
}

KPoint to_klein(const HPoint& p) {
  detail::require_in_disk(p, "to_klein");
  const double s = 1.0 + p.norm2();
  return {2.0 * p.x / s, 2.0 * p.y / s};
}

HPoint from_klein(const KPoint& k) {
  const double n2 = k.x * k.x + k.y * k.y;
  if (!(n2 < 1.0)) throw DomainError("from_klein: point on or outside the unit circle");
  const double s = 1.0 + std::sqrt(1.0 - n2);
  return {k.x / s, k.y / s};
}

Isometry::Isometry(std::complex<double> a, std::complex<double> b, bool reflect)
    : a_(a), b_(b), reflect_(reflect) {
  const double det = std::norm(a_) - std::norm(b_);
  if (!(det > 0.0)) throw DomainError("Isometry: |a| must exceed |b|");
  const double s = std::sqrt(det);
  a_ /= s;
  b_ /= s;
}

Isometry Isometry::rotation(double phi) {
  return {std::polar(1.0, phi / 2.0), 0.0, false};
}

Isometry Isometry::translation(const HPoint& w) {
  detail::require_in_disk(w, "Isometry::translation");
  return {1.0, w.c(), false};
}

Isometry Isometry::diameter_reflection(double phi) {
  // z -> e^{2 i phi} conj(z)
  return {std::polar(1.0, phi), 0.0, true};
}

Isometry Isometry::geodesic_reflection(const HPoint& p, const HPoint& q) {
  if (p == q) throw DomainError("geodesic_reflection: coincident points");
  const GeodesicCircle gc = geodesic_circle(p, q);
  if (gc.is_diameter) return diameter_reflection(gc.dir_angle);
  // Inversion in the orthogonal circle of center c, radius r:
  // z -> c + r^2/conj(z - c) = M(conj z) with M = [ic, -i; i, -i conj(c)]/r.
  const std::complex<double> c{gc.cx, gc.cy};
  const std::complex<double> i{0.0, 1.0};
  return {i * c / gc.r, -i / gc.r, true};
}

HPoint Isometry::operator()(const HPoint& p) const {
  std::complex<double> z = p.c();
  if (reflect_) z = std::conj(z);
  const std::complex<double> w = (a_ * z + b_) / (std::conj(b_) * z + std::conj(a_));
  return HPoint::from(w);
}

Isometry Isometry::compose(const Isometry& inner) const {
  // (*this) after inner. If *this conjugates first, the conjugation
  // commutes past inner's Moebius part by conjugating its coefficients.
  std::complex<double> ia = inner.a_, ib = inner.b_;
  if (reflect_) {
    ia = std::conj(ia);
    ib = std::conj(ib);
  }
  const std::complex<double> a = a_ * ia + b_ * std::conj(ib);
  const std::complex<double> b = a_ * ib + b_ * std::conj(ia);
  return {a, b, reflect_ != inner.reflect_};
}

Isometry Isometry::inverse() const {
  if (!reflect_) return {std::conj(a_), -b_, false};
  // f = M o conj  =>  f^{-1} = conj o M^{-1} = conj(M^{-1}) o conj.
  return {a_, -std::conj(b_), true};
}

GeodesicCircle geodesic_circle(const HPoint& p, const HPoint& q) {
  detail::require_in_disk(p, "geodesic_circle");
  detail::require_in_disk(q, "geodesic_circle");
  // Orthogonality to the unit circle gives 2 <p, c> = |p|^2 + 1 and the
  // same for q; solve the 2x2 linear system for the center c.
  const double a11 = 2.0 * p.x, a12 = 2.0 * p.y, b1 = p.norm2() + 1.0;
  const double a21 = 2.0 * q.x, a22 = 2.0 * q.y, b2 = q.norm2() + 1.0;
  const double det = a11 * a22 - a12 * a21;
  const double cross_scale = (std::abs(p.x) + std::abs(p.y) + std::abs(q.x) + std::abs(q.y) + 1.0);
  GeodesicCircle gc;
  if (std::abs(det) < 1e-14 * cross_scale) {
    gc.is_diameter = true;
    const double dx = q.x - p.x, dy = q.y - p.y;
    gc.dir_angle = (dx == 0.0 && dy == 0.0) ? std::atan2(p.y, p.x) : std::atan2(dy, dx);
    return gc;
  }
  gc.cx = (b1 * a22 - b2 * a12) / det;
  gc.cy = (a11 * b2 - a21 * b1) / det;
  gc.r = std::sqrt(gc.cx * gc.cx + gc.cy * gc.cy - 1.0);
  return gc;
}

HPoint midpoint(const HPoint& p, const HPoint& q) {
  // Translate p to the origin, walk half the distance toward the image
  // of q, translate back.
  const Isometry t = Isometry::translation(p);
  const HPoint qo = t.inverse()(q);
  const double d = dist({0.0, 0.0}, qo);
  if (d == 0.0) return p;
  const double rho = std::tanh(d / 4.0);  // disk radius of the half-distance point
  const double ang = std::atan2(qo.y, qo.x);
  return t(HPoint{rho * std::cos(ang), rho * std::sin(ang)});
}

}  // namespace hypertile
