#pragma once

namespace hypertile {

// Geometric predicate tolerance. Lengths are computed with atanh/log1p
// formulations so relative error stays bounded near the identity.
inline constexpr double eps_geom = 1e-9;

// Angle-pi test in reduce_equivalent and the concave-angle counters.
// Looser than eps_geom because angles amplify coordinate noise.
inline constexpr double eps_angle = 1e-7;

// Optimizer stopping scales: perimeter units / area constraint residual.
inline constexpr double tol_opt = 1e-5;
inline constexpr double tol_area = 1e-8;

}  // namespace hypertile
