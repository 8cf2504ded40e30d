#include "hypertile/formulas.hpp"

#include <cmath>
#include <numbers>

#include "hypertile/geometry.hpp"

namespace hypertile {

namespace {

constexpr double pi = std::numbers::pi;

void require_spec(const RegularSpec& spec, const char* who) {
  if (!(spec.n > 2.0)) throw DomainError(std::string(who) + ": side count must exceed 2");
  const double limit = (spec.n - 2.0) * pi / spec.n;
  if (!(spec.theta > 0.0) || spec.theta > limit + 1e-15) {
    throw DomainError(std::string(who) + ": interior angle outside (0, (n-2)pi/n]");
  }
}

// cos(pi/n) - sin(theta/2) in product form, no cancellation:
// sin A - sin B = 2 cos((A+B)/2) sin((A-B)/2) with A = pi/2 - pi/n.
double cos_alpha_minus_sin_half(double n, double theta) {
  const double A = pi / 2.0 - pi / n;
  const double B = theta / 2.0;
  return 2.0 * std::cos((A + B) / 2.0) * std::sin((A - B) / 2.0);
}

}  // namespace

double regular_area(const RegularSpec& spec) {
  require_spec(spec, "regular_area");
  const double a = (spec.n - 2.0) * pi - spec.n * spec.theta;
  return a < 0.0 ? 0.0 : a;  // clamp roundoff at the degenerate angle
}

double regular_perimeter(const RegularSpec& spec) {
  require_spec(spec, "regular_perimeter");
  const double sh = std::sin(spec.theta / 2.0);
  const double diff = cos_alpha_minus_sin_half(spec.n, spec.theta);
  if (diff < -1e-15 * sh) {
    throw DomainError("regular_perimeter: cos(pi/n) < sin(theta/2), polygon is not hyperbolic");
  }
  const double u = diff > 0.0 ? diff / sh : 0.0;  // acosh argument minus 1
  return 2.0 * spec.n * detail::acosh1p(u);
}

double KSpec::area() const { return a_k(k); }
double KSpec::perimeter() const { return p_k(k); }

double a_k(double k) {
  if (!(k > 6.0)) throw DomainError("a_k: requires k > 6");
  return (k - 6.0) * pi / 3.0;
}

double p_k(double k) {
  if (!(k > 6.0)) throw DomainError("p_k: requires k > 6");
  return regular_perimeter({k, 2.0 * pi / 3.0});
}

double angle_from_perimeter(double n, double P) {
  if (!(n > 2.0)) throw DomainError("angle_from_perimeter: requires n > 2");
  if (!(P > 0.0)) throw DomainError("angle_from_perimeter: requires P > 0");
  const double alpha = pi / n;
  const double beta = P / (2.0 * n);
  return 2.0 * std::asin(std::cos(alpha) / std::cosh(beta));
}

double area_fixed_perimeter(double n, double P) {
  if (n < 0.0) throw DomainError("area_fixed_perimeter: negative side count");
  if (!(P > 0.0)) throw DomainError("area_fixed_perimeter: requires P > 0");
  if (n <= 2.0) return 0.0;
  const double alpha = pi / n;
  const double beta = P / (2.0 * n);
  return pi * (n - 2.0) - 2.0 * n * std::asin(std::cos(alpha) / std::cosh(beta));
}

double heron_area(double x, double y, double z) {
  if (!(x > 0.0) || !(y > 0.0) || !(z > 0.0)) {
    throw DomainError("heron_area: side lengths must be positive");
  }
  const double s = 0.5 * (x + y + z);
  const double fx = std::sinh(s - x), fy = std::sinh(s - y), fz = std::sinh(s - z);
  if (fx < 0.0 || fy < 0.0 || fz < 0.0) {
    throw DomainError("heron_area: triangle inequality violated");
  }
  const double num = 4.0 * std::sinh(s) * fx * fy * fz;
  const double den = 1.0 + std::cosh(x) + std::cosh(y) + std::cosh(z);
  return 2.0 * std::atan(std::sqrt(num) / den);
}

double side_opposite(double t1, double t2, double t3) {
  if (!(t1 > 0.0) || !(t2 > 0.0) || !(t3 > 0.0)) {
    throw DomainError("side_opposite: angles must be positive");
  }
  if (!(t1 + t2 + t3 < pi)) {
    throw DomainError("side_opposite: angle sum must be below pi");
  }
  // (cos t3 + cos(t1+t2)) in product form keeps the acosh argument
  // accurate as the angle sum approaches pi.
  const double num = 2.0 * std::cos((t3 + t1 + t2) / 2.0) * std::cos((t3 - t1 - t2) / 2.0);
  const double den = std::sin(t1) * std::sin(t2);
  return detail::acosh1p(num / den);
}

}  // namespace hypertile
