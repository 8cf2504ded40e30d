#include "hypertile/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>

#include "hypertile/constants.hpp"
#include "hypertile/formulas.hpp"

namespace hypertile {

namespace {
constexpr double pi = std::numbers::pi;
}

int TilingGraph::vertex_index(int id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id == id) return static_cast<int>(i);
  }
  throw StructureError("unknown vertex id " + std::to_string(id));
}

int TilingGraph::edge_index(int id) const {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].id == id) return static_cast<int>(i);
  }
  throw StructureError("unknown edge id " + std::to_string(id));
}

int TilingGraph::face_index(int id) const {
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].id == id) return static_cast<int>(i);
  }
  throw StructureError("unknown face id " + std::to_string(id));
}

int TilingGraph::degree(int vertex_id) const {
  int d = 0;
  for (const TilingEdge& e : edges) {
    if (e.a == vertex_id) ++d;
    if (e.b == vertex_id) ++d;
  }
  return d;
}

std::vector<int> TilingGraph::face_corners(const TilingFace& f) const {
  std::vector<int> corners;
  corners.reserve(f.boundary.size());
  for (const int se : f.boundary) {
    if (se == 0) throw StructureError("face boundary contains signed edge id 0");
    const TilingEdge& e = edges[edge_index(se > 0 ? se : -se)];
    corners.push_back(se > 0 ? e.a : e.b);
  }
  return corners;
}

double TilingGraph::face_area(const TilingFace& f) const {
  if (f.area) return *f.area;
  if (f.realization) return area_gauss_bonnet(*f.realization);
  throw StructureError("face " + std::to_string(f.id) + " has neither area annotation nor realization");
}

double TilingGraph::face_perimeter(const TilingFace& f) const {
  if (f.perimeter) return *f.perimeter;
  if (f.realization) return perimeter(*f.realization);
  throw StructureError("face " + std::to_string(f.id) + " has neither perimeter annotation nor realization");
}

bool TilingGraph::is_closed() const {
  std::map<int, int> slots;
  for (const TilingFace& f : faces) {
    for (const int se : f.boundary) slots[se > 0 ? se : -se]++;
  }
  for (const TilingEdge& e : edges) {
    if (slots[e.id] != 2) return false;
  }
  return true;
}

ValidationReport validate(const TilingGraph& t) {
  ValidationReport rep;
  const auto fail = [&rep](const std::string& why) {
    if (rep.detail.empty()) rep.detail = why;
  };

  // Edge slots: every edge on exactly two directed boundary slots of a
  // closed surface; a disk patch may have boundary edges on one.
  std::map<int, int> slots;
  bool ids_ok = true;
  for (const TilingEdge& e : t.edges) {
    if (e.id <= 0) {
      ids_ok = false;
      fail("edge ids must be positive");
    }
  }
  for (const TilingFace& f : t.faces) {
    for (const int se : f.boundary) {
      if (se == 0) {
        ids_ok = false;
        fail("face boundary contains 0");
        continue;
      }
      slots[se > 0 ? se : -se]++;
    }
  }
  rep.closed = true;
  rep.edge_slots_ok = ids_ok;
  for (const TilingEdge& e : t.edges) {
    const int s = slots.count(e.id) ? slots.at(e.id) : 0;
    if (s == 1) rep.closed = false;
    if (s != 2 && s != 1) {
      rep.edge_slots_ok = false;
      fail("edge " + std::to_string(e.id) + " appears on " + std::to_string(s) + " boundary slots");
    }
  }
  for (const auto& [id, s] : slots) {
    bool known = false;
    for (const TilingEdge& e : t.edges) {
      if (e.id == id) known = true;
    }
    if (!known) {
      rep.edge_slots_ok = false;
      fail("face boundary references unknown edge " + std::to_string(id));
    }
  }

  // Degrees: no vertex of degree 0 or 1.
  rep.degrees_ok = true;
  for (const TilingVertex& v : t.vertices) {
    const int d = t.degree(v.id);
    if (d < 2) {
      rep.degrees_ok = false;
      fail("vertex " + std::to_string(v.id) + " has degree " + std::to_string(d));
    }
  }

  // Connectivity over the vertex-edge incidence.
  rep.connected_ok = true;
  if (!t.vertices.empty()) {
    std::set<int> seen;
    std::vector<int> stack{t.vertices.front().id};
    seen.insert(stack.front());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const TilingEdge& e : t.edges) {
        for (const int w : {e.a, e.b}) {
          if ((e.a == v || e.b == v) && !seen.count(w)) {
            seen.insert(w);
            stack.push_back(w);
          }
        }
      }
    }
    if (seen.size() != t.vertices.size()) {
      rep.connected_ok = false;
      fail("multigraph is disconnected");
    }
  }

  // Boundary chains: target of slot i must be the source of slot i+1.
  rep.chain_ok = true;
  for (const TilingFace& f : t.faces) {
    if (f.boundary.empty()) {
      rep.chain_ok = false;
      fail("face " + std::to_string(f.id) + " has empty boundary");
      continue;
    }
    const std::size_t m = f.boundary.size();
    for (std::size_t i = 0; i < m; ++i) {
      const int se = f.boundary[i];
      const int sn = f.boundary[(i + 1) % m];
      if (se == 0 || sn == 0) continue;
      const TilingEdge& e = t.edges[t.edge_index(std::abs(se))];
      const TilingEdge& nx = t.edges[t.edge_index(std::abs(sn))];
      const int target = se > 0 ? e.b : e.a;
      const int source = sn > 0 ? nx.a : nx.b;
      if (target != source) {
        rep.chain_ok = false;
        fail("face " + std::to_string(f.id) + " boundary breaks between slots " +
             std::to_string(i) + " and " + std::to_string((i + 1) % m));
      }
    }
    if (f.realization && f.realization->size() != m) {
      rep.chain_ok = false;
      fail("face " + std::to_string(f.id) + " realization vertex count differs from boundary");
    }
  }

  // Geometric consistency: per-face Gauss-Bonnet residuals when both a
  // realization and an annotation exist; on closed surfaces the face
  // areas must sum to -2*pi*chi.
  rep.geometry_ok = true;
  bool have_all_areas = true;
  double total = 0.0;
  for (const TilingFace& f : t.faces) {
    if (f.realization && f.area) {
      const double measured = area_gauss_bonnet(*f.realization);
      if (std::abs(measured - *f.area) > 1e3 * eps_geom * (1.0 + std::abs(*f.area))) {
        rep.geometry_ok = false;
        fail("face " + std::to_string(f.id) + " annotation disagrees with measured area");
      }
    }
    if (f.area || f.realization) {
      total += f.area ? *f.area : area_gauss_bonnet(*f.realization);
    } else {
      have_all_areas = false;
    }
  }
  if (rep.closed && have_all_areas && !t.faces.empty()) {
    const double expect = -2.0 * pi * euler_characteristic(t);
    const double tol = static_cast<double>(t.faces.size()) * eps_geom * 1e3;
    if (std::abs(total - expect) > tol) {
      rep.geometry_ok = false;
      fail("total face area disagrees with -2*pi*chi");
    }
  }
  return rep;
}

int euler_characteristic(const TilingGraph& t) {
  return static_cast<int>(t.faces.size()) - static_cast<int>(t.edges.size()) +
         static_cast<int>(t.vertices.size());
}

AuditReport gauss_bonnet_audit(const TilingGraph& t) {
  AuditReport rep;
  rep.check = "gauss-bonnet";
  const bool closed = t.is_closed();
  const int chi = euler_characteristic(t);
  const double expect = -2.0 * pi * chi;
  double total = 0.0;
  double worst_face_residual = 0.0;
  for (const TilingFace& f : t.faces) {
    total += t.face_area(f);
    if (f.realization && f.area) {
      worst_face_residual =
          std::max(worst_face_residual, std::abs(area_gauss_bonnet(*f.realization) - *f.area));
    }
  }
  // The total-area identity only holds on closed surfaces; patches get
  // the per-face residual check alone.
  const double residual = closed ? std::abs(total - expect) : 0.0;
  const double tol = static_cast<double>(t.faces.size()) * eps_geom;
  rep.passed = residual <= tol && worst_face_residual <= tol;
  rep.min_slack = tol - std::max(residual, worst_face_residual);
  rep.witness = residual;
  rep.grid = {{"chi", chi},
              {"closed", closed},
              {"expected_total_area", expect},
              {"total_area", total},
              {"residual", residual},
              {"worst_face_residual", worst_face_residual},
              {"tolerance", tol}};
  return rep;
}

AuditReport degree_audit(const TilingGraph& t, double k) {
  AuditReport rep;
  rep.check = "degrees";
  const double ak = a_k(k);
  double total_area = 0.0;
  for (const TilingFace& f : t.faces) total_area += t.face_area(f);
  const double avg = total_area / static_cast<double>(t.faces.size());
  if (std::abs(avg - ak) > 1e-6 * (1.0 + ak)) {
    throw DomainError("degree_audit: average face area inconsistent with A_k for k=" +
                      std::to_string(k));
  }
  double corner_count = 0.0;
  for (const TilingFace& f : t.faces) {
    for (const int v : t.face_corners(f)) {
      if (t.degree(v) >= 3) corner_count += 1.0;
    }
  }
  const double v_bar = corner_count / static_cast<double>(t.faces.size());
  bool all_deg_2_or_3 = true;
  for (const TilingVertex& v : t.vertices) {
    const int d = t.degree(v.id);
    if (d != 2 && d != 3) all_deg_2_or_3 = false;
  }
  const bool equality = std::abs(v_bar - k) <= 1e-9 * (1.0 + k);
  const bool inequality = v_bar <= k + 1e-9 * (1.0 + k);
  // The lemma's certificate: equality exactly when every vertex has
  // degree two or three.
  rep.passed = inequality && (equality == all_deg_2_or_3);
  rep.min_slack = k - v_bar;
  rep.witness = v_bar;
  rep.grid = {{"k", k},
              {"v_bar", v_bar},
              {"equality", equality},
              {"all_degrees_2_or_3", all_deg_2_or_3},
              {"average_area", avg}};
  return rep;
}

AuditReport concave_angle_audit(const TilingGraph& t, int face_id, double k) {
  const TilingFace& f = t.faces[t.face_index(face_id)];
  if (!f.realization) throw StructureError("concave_angle_audit: face is not realized");
  AuditReport rep;
  rep.check = "concave-angles";
  const std::vector<double> angles = f.realization->interior_angles();
  const std::vector<int> corners = t.face_corners(f);
  const int n = static_cast<int>(angles.size());
  int l1 = 0, l2 = 0;
  bool concave_at_degree2 = true;
  for (int i = 0; i < n; ++i) {
    if (std::abs(angles[i] - pi) <= eps_angle) {
      ++l1;
    } else if (angles[i] > pi) {
      ++l2;
      if (t.degree(corners[i]) != 2) concave_at_degree2 = false;
    }
  }
  bool all_deg_2_or_3 = true;
  for (const TilingVertex& v : t.vertices) {
    const int d = t.degree(v.id);
    if (d != 2 && d != 3) all_deg_2_or_3 = false;
  }
  const double lhs = l1 + 2.0 * l2;
  const double rhs = n - k;
  rep.passed = lhs >= rhs - 1e-12;
  rep.min_slack = lhs - rhs;
  rep.witness = static_cast<double>(face_id);
  rep.grid = {{"k", k},
              {"n", n},
              {"l1", l1},
              {"l2", l2},
              {"equality", std::abs(lhs - rhs) < 1e-12},
              {"equality_certificate", all_deg_2_or_3 && concave_at_degree2}};
  return rep;
}

FlattenResult flatten_vertex(const HPoint& a, const HPoint& b, const HPoint& c) {
  if (a == b || b == c || a == c) throw DomainError("flatten_vertex: chain points must be distinct");
  FlattenResult out;
  out.ac = {a, c};
  // A chain is collinear exactly when the angle at the middle vertex is
  // flat, the same predicate reduce_equivalent uses.
  if (std::abs(angle_at(b, a, c) - pi) <= eps_angle) {
    out.region_area = 0.0;
    return out;
  }
  out.region = {a, b, c};
  out.region_area = heron_area(dist(a, b), dist(b, c), dist(a, c));
  return out;
}

bool HullCoverReport::tight(double tol) const {
  return hypothesis_ok && std::abs(slack_hull_vs_formula) < tol && std::abs(slack_jensen) < tol &&
         std::abs(slack_monotone) < tol && std::abs(slack_cover) < tol;
}

HullCoverReport hull_chain_audit(std::span<const HullDatum> hulls, double k) {
  if (hulls.empty()) throw DomainError("hull_chain_audit: no hulls");
  HullCoverReport rep;
  rep.k = k;
  rep.ak = a_k(k);
  rep.pk = p_k(k);
  rep.n_faces = static_cast<int>(hulls.size());
  const double N = static_cast<double>(hulls.size());
  const auto A = [&](double n) { return area_fixed_perimeter(n, rep.pk); };

  double sum_hull_area = 0.0;
  for (const HullDatum& h : hulls) {
    rep.hull_sides.push_back(h.sides);
    rep.hull_areas.push_back(h.area);
    rep.face_perimeters.push_back(h.perimeter);
    sum_hull_area += h.area;
    if (h.perimeter > rep.pk * (1.0 + 1e-9) + 1e-9 && !rep.hypothesis_witness_face) {
      rep.hypothesis_ok = false;
      rep.hypothesis_witness_face = static_cast<int>(rep.hull_sides.size()) - 1;
    }
  }
  if (!rep.hypothesis_ok) {
    rep.verdict = "hypothesis-violation";
    return rep;
  }

  // First link: Area(Q_i*) <= A(n_i) per face, summed.
  std::vector<double> working;
  double sum_A = 0.0;
  for (const HullDatum& h : hulls) {
    working.push_back(static_cast<double>(h.sides));
    sum_A += A(static_cast<double>(h.sides));
  }
  rep.slack_hull_vs_formula = sum_A - sum_hull_area;

  // Doubling substitutions: pair each degenerate 0/1-gon hull with the
  // largest side count above k and replace the pair {n_i, n_j} by
  // {n_j/2, n_j/2}; A(n_i) = 0 and A(n_j) < 2 A(n_j/2).
  std::sort(working.begin(), working.end());
  while (!working.empty() && working.front() < 2.0) {
    auto big = std::max_element(working.begin(), working.end());
    if (*big <= k) {
      rep.used_direct_bound = true;
      break;
    }
    const double nj = *big;
    rep.substitution_slacks.push_back(2.0 * A(nj / 2.0) - A(nj));
    ++rep.substitutions;
    working.erase(big);
    working.erase(working.begin());  // the degenerate entry
    working.push_back(nj / 2.0);
    working.push_back(nj / 2.0);
    std::sort(working.begin(), working.end());
  }

  double sum_A_sub = 0.0;
  for (const double n : working) sum_A_sub += A(n);
  if (rep.used_direct_bound) {
    // Every remaining side count is at most k, so the per-term bound
    // A(n_i) <= A(k) already gives the Jensen target.
    rep.slack_jensen = N * A(k) - sum_A_sub;
    rep.slack_monotone = 0.0;
  } else {
    double mean = 0.0;
    for (const double n : working) mean += n;
    mean /= N;
    rep.slack_jensen = N * A(mean) - sum_A_sub;
    rep.slack_monotone = N * (A(k) - A(mean));
  }
  rep.slack_cover = sum_hull_area - N * rep.ak;
  rep.verdict = rep.tight() ? "extremal" : "strict-slack";
  return rep;
}

HullCoverReport hull_cover_audit(const TilingGraph& t, double k) {
  const int chi = euler_characteristic(t);
  // On a disk patch only interior faces (no corner on the patch
  // boundary) model a face of a closed tiling.
  std::set<int> boundary_vertices;
  if (!t.is_closed()) {
    std::map<int, int> slots;
    for (const TilingFace& f : t.faces) {
      for (const int se : f.boundary) slots[se > 0 ? se : -se]++;
    }
    for (const TilingEdge& e : t.edges) {
      if (slots[e.id] < 2) {
        boundary_vertices.insert(e.a);
        boundary_vertices.insert(e.b);
      }
    }
  }
  std::vector<HullDatum> hulls;
  hulls.reserve(t.faces.size());
  for (const TilingFace& f : t.faces) {
    if (!boundary_vertices.empty()) {
      bool interior = true;
      for (const int c : t.face_corners(f)) {
        if (boundary_vertices.count(c)) interior = false;
      }
      if (!interior) continue;
    }
    if (!f.realization) {
      throw StructureError("hull_cover_audit: face " + std::to_string(f.id) +
                           " has no per-face lift");
    }
    const std::vector<int> corners = t.face_corners(f);
    std::vector<HPoint> high_degree;
    for (std::size_t i = 0; i < corners.size(); ++i) {
      if (t.degree(corners[i]) >= 3) high_degree.push_back(f.realization->vertex(i));
    }
    if (high_degree.size() < 2 && chi < 1) {
      throw StructureError(
          "hull_cover_audit: face " + std::to_string(f.id) +
          " has fewer than two degree->=3 vertices on a surface other than S^2/RP^2");
    }
    HullDatum d;
    d.perimeter = t.face_perimeter(f);
    if (high_degree.size() >= 3) {
      try {
        const Polygon hull = convex_hull(high_degree);
        d.sides = static_cast<int>(hull.size());
        d.area = area_gauss_bonnet(hull);
      } catch (const DegenerateHullError& e) {
        d.sides = static_cast<int>(e.witness.size());
        d.area = 0.0;
      }
    } else {
      d.sides = static_cast<int>(high_degree.size());
      d.area = 0.0;
    }
    hulls.push_back(d);
  }
  if (hulls.empty()) {
    throw StructureError("hull_cover_audit: no interior faces to audit");
  }
  return hull_chain_audit(hulls, k);
}

AuditReport total_perimeter_compare(const TilingGraph& t, double k, double m) {
  AuditReport rep;
  rep.check = "total-perimeter";
  const double am = a_k(m), ak = a_k(k);
  if (am > ak * (1.0 + 1e-12)) throw DomainError("total_perimeter_compare: A_m exceeds A_k");
  const double N = static_cast<double>(t.faces.size());
  double total_area = 0.0;
  double P = 0.0;
  bool first = true;
  for (const TilingFace& f : t.faces) {
    total_area += t.face_area(f);
    const double p = t.face_perimeter(f);
    if (first) {
      P = p;
      first = false;
    } else if (std::abs(p - P) > 1e-9 * (1.0 + P)) {
      throw DomainError("total_perimeter_compare: faces do not share one perimeter");
    }
  }
  const double A = t.total_area ? *t.total_area : total_area;
  const double avg = total_area / N;
  if (std::abs(avg - am) > 1e-6 * (1.0 + am)) {
    throw DomainError("total_perimeter_compare: average area inconsistent with A_m");
  }
  const double lhs = P * (A / am);
  const double mid = p_k(m) * (A / am);
  const double rhs = p_k(k) * (A / ak);
  const double slack1 = lhs - mid;
  const double slack2 = mid - rhs;
  const bool equality = std::abs(m - k) < 1e-12 && std::abs(slack1) < 1e-8 * (1.0 + lhs) &&
                        std::abs(slack2) < 1e-8 * (1.0 + lhs);
  rep.passed = slack1 >= -1e-9 * (1.0 + lhs) && slack2 >= -1e-9 * (1.0 + lhs);
  rep.min_slack = std::min(slack1, slack2);
  rep.grid = {{"k", k},          {"m", m},          {"total_area", A},
              {"P", P},          {"P_m", p_k(m)},   {"P_k", p_k(k)},
              {"slack_1", slack1}, {"slack_2", slack2}, {"equality", equality}};
  return rep;
}

}  // namespace hypertile
