#pragma once

#include "hypertile/errors.hpp"

namespace hypertile {

/// Parameters of the regular-polygon formula family: a (possibly
/// noninteger) side count n and an interior angle theta. Valid when
/// n > 2 and 0 < theta <= (n-2)*pi/n; the boundary angle gives the
/// degenerate zero-area, zero-perimeter polygon.
struct RegularSpec {
  double n = 0.0;
  double theta = 0.0;
};

/// The one-parameter family of regular k-gons with 120-degree angles,
/// k real > 6. Area (k-6)*pi/3 and perimeter both increase from 0 to
/// infinity with k.
struct KSpec {
  double k = 0.0;
  double area() const;       // A_k
  double perimeter() const;  // P_k
};

/// Area of the regular polygon: (n-2)*pi - n*theta.
/// Throws DomainError unless n > 2 and 0 < theta <= (n-2)*pi/n.
double regular_area(const RegularSpec& spec);

/// Perimeter of the regular polygon: 2n * acosh(cos(pi/n)/sin(theta/2)).
/// Strictly decreasing in theta for fixed n; 0 at the Euclidean-limit
/// angle. Throws DomainError when cos(pi/n) < sin(theta/2).
double regular_perimeter(const RegularSpec& spec);

/// A_k = (k-6)*pi/3 and P_k = perimeter of the regular k-gon with
/// interior angle 2*pi/3, for real k > 6.
double a_k(double k);
double p_k(double k);

/// Inverse of regular_perimeter in theta: the interior angle of the
/// regular n-gon with perimeter P, i.e. 2*asin(cos(pi/n)*sech(P/2n)).
double angle_from_perimeter(double n, double P);

/// Area of the regular n-gon of perimeter P, extended continuously to 0
/// on [0,2]: pi*(n-2) - 2n*asin(cos(pi/n)*sech(P/2n)) for n > 2.
/// Throws DomainError for negative n or nonpositive P.
double area_fixed_perimeter(double n, double P);

/// Hyperbolic Heron: area of the triangle with side lengths x, y, z.
/// Uses the factored radicand 4 sinh(s) sinh(s-x) sinh(s-y) sinh(s-z),
/// s the semiperimeter, so there is no cancellation for thin triangles.
/// Throws DomainError when the triangle inequality fails.
double heron_area(double x, double y, double z);

/// Length of the side opposite t3 in the triangle with interior angles
/// (t1, t2, t3): acosh((cos t3 + cos t1 cos t2)/(sin t1 sin t2)).
/// Throws DomainError unless all angles are positive with sum < pi.
double side_opposite(double t1, double t2, double t3);

}  // namespace hypertile
