#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypertile/audit.hpp"
#include "hypertile/polygon.hpp"

namespace hypertile {

struct TilingVertex {
  int id = 0;
  std::optional<HPoint> lift;  // set when one global disk position exists
};

/// Undirected edge between two vertex ids; loops (a == b) are allowed.
struct TilingEdge {
  int id = 0;  // positive, so face boundaries can use signed references
  int a = 0;
  int b = 0;
};

struct TilingFace {
  int id = 0;
  /// Signed edge ids, counterclockwise. +e traverses edge e from a to b,
  /// -e from b to a. Corner i of the face is the source vertex of slot i.
  std::vector<int> boundary;
  /// Geometric realization in the face's own disk lift; vertex i of the
  /// polygon is corner i of the boundary.
  std::optional<Polygon> realization;
  std::optional<double> area;       // annotation, overrides the measured value
  std::optional<double> perimeter;  // annotation
};

/// A combinatorial face/edge/vertex multigraph with optional per-face
/// geometric lifts. Closed surfaces have every edge on exactly two
/// directed boundary slots; disk patches additionally have boundary
/// edges lying on exactly one.
struct TilingGraph {
  std::vector<TilingVertex> vertices;
  std::vector<TilingEdge> edges;
  std::vector<TilingFace> faces;
  std::optional<int> genus;
  std::optional<double> total_area;

  int vertex_index(int id) const;
  int edge_index(int id) const;
  int face_index(int id) const;
  /// Edge-end incidences at the vertex; loops count twice.
  int degree(int vertex_id) const;
  /// Corner vertex ids of the face, in boundary order.
  std::vector<int> face_corners(const TilingFace& f) const;
  /// Measured or annotated face area; throws when neither is available.
  double face_area(const TilingFace& f) const;
  double face_perimeter(const TilingFace& f) const;
  bool is_closed() const;  // no boundary edges
};

/// Results of the four structural invariants, checked independently so
/// fault-injection tests can target exactly one.
struct ValidationReport {
  bool edge_slots_ok = false;   // each edge on 2 slots (1 allowed on patch boundary)
  bool degrees_ok = false;      // no vertex of degree 0 or 1
  bool connected_ok = false;
  bool geometry_ok = false;     // per-face GB residuals and total area vs -2*pi*chi
  bool chain_ok = false;        // boundary walks close up vertex-to-vertex
  bool closed = false;          // no boundary edges found
  std::string detail;           // first violation, human-readable
  bool all_ok() const { return edge_slots_ok && degrees_ok && connected_ok && geometry_ok && chain_ok; }
};
ValidationReport validate(const TilingGraph& t);

int euler_characteristic(const TilingGraph& t);

/// Sum of face areas must equal -2*pi*chi within N*eps_geom; realized
/// faces with annotations are also checked face-by-face.
AuditReport gauss_bonnet_audit(const TilingGraph& t);

/// Average count per face of boundary corners at vertices of degree >= 3
/// is at most k, with equality iff every vertex has degree two or three.
/// Requires average face area equal to A_k.
AuditReport degree_audit(const TilingGraph& t, double k);

/// For one realized face: l1 angles equal to pi, l2 angles above pi,
/// checks l1 + 2*l2 >= n - k plus the equality certificate (all degrees
/// 2 or 3 and every concave angle at a degree-2 vertex).
AuditReport concave_angle_audit(const TilingGraph& t, int face_id, double k);

/// Flattening a two-edge chain ABC: the geodesic AC plus the enclosed
/// triangular region (empty for collinear chains).
struct FlattenResult {
  GeodesicSegment ac;
  std::vector<HPoint> region;  // triangle A,B,C or empty when collinear
  double region_area = 0.0;
};
FlattenResult flatten_vertex(const HPoint& a, const HPoint& b, const HPoint& c);

/// Hull input for the inequality-chain evaluator.
struct HullDatum {
  int sides = 0;        // vertex count of the hull (0, 1, 2 for degenerate)
  double area = 0.0;    // 0 for degenerate hulls
  double perimeter = 0.0;
};

/// Per-face hulls of degree->=3 corners plus every link of the averaged
/// hull-area inequality chain at A(.) = area_fixed_perimeter(., P_k).
struct HullCoverReport {
  double k = 0.0, ak = 0.0, pk = 0.0;
  int n_faces = 0;
  std::vector<int> hull_sides;
  std::vector<double> hull_areas;
  std::vector<double> face_perimeters;
  bool hypothesis_ok = true;  // every face perimeter at most P_k
  std::optional<int> hypothesis_witness_face;
  int substitutions = 0;       // doubling substitutions for 0/1-gon hulls
  bool used_direct_bound = false;
  std::vector<double> substitution_slacks;
  double slack_hull_vs_formula = 0.0;  // sum A(n_i) - sum Area(Q_i*)
  double slack_jensen = 0.0;           // N A(mean) - sum A(n_i)
  double slack_monotone = 0.0;         // N (A(k) - A(mean))
  double slack_cover = 0.0;            // sum Area(Q_i*) - N A_k
  std::string verdict;                 // extremal | strict-slack | hypothesis-violation
  bool tight(double tol = 1e-8) const;
};

HullCoverReport hull_chain_audit(std::span<const HullDatum> hulls, double k);
HullCoverReport hull_cover_audit(const TilingGraph& t, double k);

/// Total-perimeter comparison for tilings by equal-perimeter faces of
/// average area A_m <= A_k:
///   P*(A/A_m) >= P_m*(A/A_m) >= P_k*(A/A_k).
AuditReport total_perimeter_compare(const TilingGraph& t, double k, double m);

/// Finite simply connected patch of the {k,3} tiling: a regular k-gon
/// with 120-degree angles at the origin, expanded by geodesic edge
/// reflections to the given combinatorial depth.
TilingGraph generate_patch(int k, int depth);

/// The 24-heptagon, 84-edge, 56-vertex three-regular tiling of the
/// genus-3 surface, each face realized as the regular heptagon in its
/// own lift.
TilingGraph klein_quartic_fixture();

/// Genus-2 surface tiled by a single octagon: four loop edges at one
/// vertex, boundary word a b a^-1 b^-1 c d c^-1 d^-1, all eight corners
/// at the single vertex, realized with interior angles pi/4.
TilingGraph octagon_genus2_fixture();

/// Flat square torus, combinatorial only: one face, two loop edges, one
/// vertex of degree 4.
TilingGraph square_torus_fixture();

/// Klein-quartic variants for fault-directed audits: one face area
/// annotation bumped by delta, or one edge contracted to create a
/// degree-4 vertex.
TilingGraph klein_quartic_area_perturbed(double delta = 0.1);
TilingGraph klein_quartic_degree_perturbed();

}  // namespace hypertile
