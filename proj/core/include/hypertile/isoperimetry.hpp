#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hypertile/audit.hpp"
#include "hypertile/exactq.hpp"
#include "hypertile/polygon.hpp"

namespace hypertile {

/// Triangle family of fixed base z and fixed perimeter, parametrized by
/// one free side length x (the other is y = 2c - x with c half of x+y).
/// Up to monotone transformations, the area is maximized exactly where
/// the numerator core F(x) is.
struct TriangleFamily {
  double z = 0.0;  // base
  double c = 0.0;  // (x+y)/2
  double m = 0.0;  // cosh(z)

  static TriangleFamily from_base_perimeter(double z, double perim);
  /// F(x) = 2m cosh(x) cosh(2c-x) - cosh^2(x) - cosh^2(2c-x).
  double F(double x) const;
  /// F'(x) = 4 (cosh(2c) - m) sinh(c-x) cosh(c-x); vanishes only at x = c.
  double dF(double x) const;
};

struct IsoscelesScanResult {
  double x_star = 0.0;   // grid maximizer of the Heron area
  double c = 0.0;        // the analytic optimum x = y = c
  double spacing = 0.0;  // grid spacing
  double area_star = 0.0;
};

/// Grid search for the side length x maximizing the area of a triangle
/// with base z and perimeter perim. The maximizer is the isosceles
/// x = c within one grid spacing.
IsoscelesScanResult isosceles_scan(double z, double perim, int grid);

struct OptimizationResult {
  Polygon polygon;
  double perimeter = 0.0;
  double area = 0.0;
  std::int64_t iterations = 0;
  bool converged = false;
  int restarts_used = 0;
  double benchmark_perimeter = 0.0;  // regular n-gon of the target area
};

/// Derivative-free search for the minimum-perimeter simple n-gon of the
/// given area: Nelder-Mead over the 2n vertex coordinates with a
/// quadratic area penalty and penalty escalation, restarted from seeded
/// random configurations. Deterministic for a fixed seed.
/// Throws DomainError unless 0 < area < (n-2)*pi.
OptimizationResult min_perimeter_polygon(int n, double area, std::uint64_t seed,
                                         int restarts = 8);

/// P(n) at fixed area is strictly decreasing in n: scans n = 3..n_max
/// (skipping n with area >= (n-2)pi) and reports the smallest decrement.
AuditReport verify_regular_monotone(double area, int n_max);

/// A(n) at fixed perimeter P is strictly increasing and strictly concave:
/// checks first differences positive and second central differences
/// negative on the inclusive grid [n_lo, n_hi] with the given step.
AuditReport verify_concavity(double P, double n_lo, double n_hi, double step);

/// With P = P_k fixed, checks A(k) < 2A(k/2) and A(n) < 2A(n/2) for n on
/// the grid [k, n_hi]; reports the minimum slack 2A(n/2) - A(n).
AuditReport verify_doubling(double k, double n_hi, double step);

/// P_k/A_k is strictly decreasing in k; also checks the substituted form
/// x -> x/acosh(cos(pi/6-x)/sin(pi/3)) is increasing at x = pi/6 - pi/k.
AuditReport perimeter_ratio_scan(double k_lo, double k_hi, double step);

/// Exact-arithmetic certificate for the sextic
/// 256 g^6 - 192 sqrt(3) g^5 - 112 g^4 + 168 sqrt(3) g^3 - 60 g^2
///   - 36 sqrt(3) g + 27
/// having no root in (sqrt(3)/2, 1): the polynomial vanishes at
/// sqrt(3)/2 and its first through sixth derivatives there are positive,
/// so the Taylor expansion about sqrt(3)/2 has positive coefficients.
struct SexticCheck {
  std::array<QSqrt3, 7> coefficients;        // degree 0..6
  std::array<QSqrt3, 6> derivatives_at_base; // p'(s/2) .. p''''''(s/2), s = sqrt(3)
  QSqrt3 value_at_base;                      // p(sqrt(3)/2), must be 0
  QSqrt3 value_at_one;                       // p(1) = 111 - 60 sqrt(3), positive
  bool derivatives_match_expected = false;
  bool no_root_in_interval = false;
};
SexticCheck sextic_data();
AuditReport sextic_check();

}  // namespace hypertile
