#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hypertile {

// Numeric precondition violated (point outside the model disk, infeasible
// angles or areas, argument out of a formula's domain).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Polygon violates a structural requirement (self-intersecting boundary,
// repeated consecutive vertices, too few vertices).
class InvalidPolygonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polygon is structurally fine but has nonpositive measured area.
class DegeneratePolygonError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Convex hull collapsed to fewer than 3 extreme points. Carries the
// surviving extreme points as a witness.
class DegenerateHullError : public std::runtime_error {
 public:
  DegenerateHullError(const std::string& what, std::vector<std::size_t> extreme)
      : std::runtime_error(what), witness(std::move(extreme)) {}
  std::vector<std::size_t> witness;  // indices into the input point set
};

// Patch expansion drove coordinates too close to the disk boundary.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, int depth_reached)
      : std::runtime_error(what), depth(depth_reached) {}
  int depth;
};

// Tiling multigraph violates an incidence invariant.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypertile
