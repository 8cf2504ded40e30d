#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "hypertile/tiling.hpp"
#include "test_util.hpp"

using namespace hypertile;
constexpr double pi = std::numbers::pi;

TEST_CASE("klein quartic fixture") {
  const TilingGraph t = klein_quartic_fixture();
  CHECK(t.faces.size() == 24);
  CHECK(t.edges.size() == 84);
  CHECK(t.vertices.size() == 56);
  CHECK(euler_characteristic(t) == -4);  // genus 3

  SUBCASE("validator passes all invariants") {
    const ValidationReport v = validate(t);
    CHECK(v.edge_slots_ok);
    CHECK(v.degrees_ok);
    CHECK(v.connected_ok);
    CHECK(v.chain_ok);
    CHECK(v.geometry_ok);
    CHECK(v.closed);
    CHECK(v.all_ok());
  }
  SUBCASE("three-regular") {
    for (const TilingVertex& v : t.vertices) CHECK(t.degree(v.id) == 3);
  }
  SUBCASE("every edge appears once forward, once backward") {
    std::map<int, int> fwd, bwd;
    for (const TilingFace& f : t.faces) {
      for (const int se : f.boundary) (se > 0 ? fwd[se] : bwd[-se])++;
    }
    for (const TilingEdge& e : t.edges) {
      CHECK(fwd[e.id] == 1);
      CHECK(bwd[e.id] == 1);
    }
  }
  SUBCASE("gauss-bonnet audit: 24 * pi/3 = 8 pi") {
    const AuditReport a = gauss_bonnet_audit(t);
    CHECK(a.passed);
    CHECK(a.grid["total_area"] == doctest::Approx(8 * pi).epsilon(1e-12));
    CHECK(a.grid["expected_total_area"] == doctest::Approx(8 * pi).epsilon(1e-15));
  }
  SUBCASE("degree audit: equality at k = 7 with the degree certificate") {
    const AuditReport a = degree_audit(t, 7.0);
    CHECK(a.passed);
    CHECK(a.grid["v_bar"] == doctest::Approx(7.0).epsilon(1e-15));
    CHECK(a.grid["equality"] == true);
    CHECK(a.grid["all_degrees_2_or_3"] == true);
  }
  SUBCASE("concave-angle audit on a face: equality, no flat or reflex angles") {
    const AuditReport a = concave_angle_audit(t, t.faces.front().id, 7.0);
    CHECK(a.passed);
    CHECK(a.grid["l1"] == 0);
    CHECK(a.grid["l2"] == 0);
    CHECK(a.grid["equality"] == true);
    CHECK(a.grid["equality_certificate"] == true);
  }
  SUBCASE("per-face Euler contribution 1 - v/6 sums to chi (all degrees 3)") {
    double sum = 0.0;
    for (const TilingFace& f : t.faces) {
      int v = 0;
      for (const int c : t.face_corners(f)) {
        if (t.degree(c) >= 3) ++v;
      }
      sum += 1.0 - v / 6.0;
    }
    CHECK(sum == doctest::Approx(-4.0).epsilon(1e-12));
  }
}

TEST_CASE("octagon genus-2 fixture") {
  const TilingGraph t = octagon_genus2_fixture();
  CHECK(t.faces.size() == 1);
  CHECK(t.edges.size() == 4);
  CHECK(t.vertices.size() == 1);
  CHECK(euler_characteristic(t) == -2);
  CHECK(validate(t).all_ok());
  CHECK(t.degree(0) == 8);

  const AuditReport gb = gauss_bonnet_audit(t);
  CHECK(gb.passed);
  CHECK(gb.grid["total_area"] == doctest::Approx(4 * pi).epsilon(1e-12));

  // Average area 4 pi matches A_18; eight degree->=3 corners per face.
  const AuditReport deg = degree_audit(t, 18.0);
  CHECK(deg.passed);
  CHECK(deg.grid["v_bar"] == doctest::Approx(8.0));
  CHECK(deg.grid["equality"] == false);
  CHECK(deg.grid["all_degrees_2_or_3"] == false);
}

TEST_CASE("square torus fixture") {
  const TilingGraph t = square_torus_fixture();
  CHECK(euler_characteristic(t) == 0);
  const ValidationReport v = validate(t);
  CHECK(v.all_ok());
  // Exact per-face Euler identity 1 - n/2 + sum 1/deg also gives chi = 0.
  CHECK(1.0 - 4.0 / 2.0 + 4.0 * (1.0 / 4.0) == doctest::Approx(0.0));
}

TEST_CASE("fault injection: each invariant fails alone") {
  SUBCASE("edge slot count") {
    TilingGraph t = octagon_genus2_fixture();
    t.faces[0].boundary.push_back(4);  // edge 4 now appears on three slots
    t.faces[0].realization.reset();
    t.faces[0].area.reset();
    const ValidationReport v = validate(t);
    CHECK(!v.edge_slots_ok);
    CHECK(v.degrees_ok);
    CHECK(v.connected_ok);
    CHECK(v.chain_ok);  // all loops at one vertex, the walk still closes
    CHECK(v.geometry_ok);
  }
  SUBCASE("degree-1 vertex behind a slit face") {
    TilingGraph t = square_torus_fixture();
    t.vertices.push_back({1, std::nullopt});
    t.edges.push_back({3, 0, 1});
    TilingFace slit;
    slit.id = 1;
    slit.boundary = {3, -3};  // bigon traversing the pendant edge both ways
    t.faces.push_back(slit);
    const ValidationReport v = validate(t);
    CHECK(!v.degrees_ok);  // the pendant vertex has degree 1
    CHECK(v.edge_slots_ok);
    CHECK(v.connected_ok);
    CHECK(v.chain_ok);
    CHECK(v.geometry_ok);
  }
  SUBCASE("disconnected") {
    TilingGraph t = square_torus_fixture();
    const TilingGraph u = square_torus_fixture();
    t.vertices.push_back({10, std::nullopt});
    for (const TilingEdge& e : u.edges) t.edges.push_back({e.id + 10, 10, 10});
    TilingFace f = u.faces[0];
    f.id = 1;
    f.boundary = {11, 12, -11, -12};
    t.faces.push_back(f);
    const ValidationReport v = validate(t);
    CHECK(!v.connected_ok);
    CHECK(v.edge_slots_ok);
    CHECK(v.degrees_ok);
    CHECK(v.chain_ok);
  }
  SUBCASE("geometric consistency") {
    const TilingGraph t = klein_quartic_area_perturbed(0.1);
    const ValidationReport v = validate(t);
    CHECK(!v.geometry_ok);
    CHECK(v.edge_slots_ok);
    CHECK(v.degrees_ok);
    CHECK(v.connected_ok);
    CHECK(v.chain_ok);
  }
}

TEST_CASE("perturbed klein quartic variants fail exactly the intended audit") {
  SUBCASE("area perturbation trips gauss-bonnet with residual 0.1") {
    const TilingGraph t = klein_quartic_area_perturbed(0.1);
    const AuditReport gb = gauss_bonnet_audit(t);
    CHECK(!gb.passed);
    CHECK(*gb.witness == doctest::Approx(0.1).epsilon(1e-9));
    CHECK(euler_characteristic(t) == -4);
    // Average area is now off A_7, so the degree audit refuses to run.
    CHECK_THROWS_AS(degree_audit(t, 7.0), DomainError);
  }
  SUBCASE("degree perturbation keeps gauss-bonnet but loses the equality certificate") {
    const TilingGraph t = klein_quartic_degree_perturbed();
    CHECK(euler_characteristic(t) == -4);  // contraction preserves chi
    CHECK(validate(t).all_ok());
    CHECK(gauss_bonnet_audit(t).passed);
    const AuditReport deg = degree_audit(t, 7.0);
    CHECK(deg.passed);  // the inequality still holds, strictly
    CHECK(deg.grid["equality"] == false);
    CHECK(deg.grid["all_degrees_2_or_3"] == false);
    CHECK(deg.grid["v_bar"].get<double>() < 7.0);
    CHECK(deg.grid["v_bar"] == doctest::Approx(166.0 / 24.0).epsilon(1e-12));
  }
}

namespace {

// Single realized face wrapped as a disk patch, for per-face audits.
TilingGraph single_face_patch(const Polygon& poly) {
  TilingGraph t;
  const int n = static_cast<int>(poly.size());
  for (int i = 0; i < n; ++i) t.vertices.push_back({i, poly.vertex(i)});
  for (int i = 0; i < n; ++i) t.edges.push_back({i + 1, i, (i + 1) % n});
  TilingFace f;
  f.id = 0;
  for (int i = 0; i < n; ++i) f.boundary.push_back(i + 1);
  f.realization = poly;
  t.faces.push_back(std::move(f));
  return t;
}

}  // namespace

TEST_CASE("concave-angle audit on synthetic faces") {
  SUBCASE("a convex 9-gon of area A_7 cannot satisfy the count bound") {
    // theta from (9-2)pi - 9 theta = pi/3.
    const double theta = (7.0 * pi - pi / 3.0) / 9.0;
    const TilingGraph t = single_face_patch(realize_regular(9, theta));
    const AuditReport a = concave_angle_audit(t, 0, 7.0);
    CHECK(!a.passed);  // l1 + 2*l2 = 0 < 9 - 7
    CHECK(a.grid["l1"] == 0);
    CHECK(a.grid["l2"] == 0);
    CHECK(a.min_slack == doctest::Approx(-2.0));
  }
  SUBCASE("a 9-gon equivalent to the regular 7-gon passes with equality") {
    const Polygon hept = realize_regular(7, 2 * pi / 3);
    std::vector<HPoint> vs = hept.vertices();
    vs.insert(vs.begin() + 5, midpoint(hept.vertex(4), hept.vertex(5)));
    vs.insert(vs.begin() + 1, midpoint(hept.vertex(0), hept.vertex(1)));
    const TilingGraph t = single_face_patch(Polygon(vs));
    const AuditReport a = concave_angle_audit(t, 0, 7.0);
    CHECK(a.passed);  // two flat angles supply l1 = 2 = n - k
    CHECK(a.grid["l1"] == 2);
    CHECK(a.grid["l2"] == 0);
    CHECK(a.grid["equality"] == true);
  }
}

TEST_CASE("flatten_vertex") {
  SUBCASE("collinear chain encloses nothing") {
    const HPoint a{-0.3, 0.0}, b{0.0, 0.0}, c{0.4, 0.0};
    const FlattenResult r = flatten_vertex(a, b, c);
    CHECK(r.region_area == 0.0);
    CHECK(r.region.empty());
    CHECK(r.ac.length() == doctest::Approx(dist(a, c)).epsilon(1e-15));
  }
  SUBCASE("flattening a convex corner trades perimeter for area") {
    // Square with one corner flattened into a pentagon chain.
    const Polygon p = realize_regular(4, 1.2);
    std::vector<HPoint> vs = p.vertices();
    const FlattenResult r = flatten_vertex(vs[0], vs[1], vs[2]);
    CHECK(r.region_area > 0.0);
    CHECK(r.region_area ==
          doctest::Approx(heron_area(dist(vs[0], vs[1]), dist(vs[1], vs[2]),
                                     dist(vs[0], vs[2]))).epsilon(1e-12));
    // Triangle inequality: the shortcut is shorter.
    CHECK(dist(vs[0], vs[2]) < dist(vs[0], vs[1]) + dist(vs[1], vs[2]));
    const Polygon flattened({vs[0], vs[2], vs[3]});
    CHECK(perimeter(flattened) < perimeter(p));
    CHECK(area_gauss_bonnet(flattened) ==
          doctest::Approx(area_gauss_bonnet(p) - r.region_area).epsilon(1e-10));
  }
  SUBCASE("flattening all degree-2 detours of a padded polygon recovers the hull input") {
    const Polygon p = realize_regular(5, 1.0);
    std::vector<HPoint> vs = p.vertices();
    vs.insert(vs.begin() + 1, midpoint(p.vertex(0), p.vertex(1)));
    std::vector<HPoint> flattened;
    const Polygon padded(vs);
    for (std::size_t i = 0; i < padded.size(); ++i) {
      if (std::abs(padded.interior_angle(i) - pi) > eps_angle) {
        flattened.push_back(padded.vertex(i));
      }
    }
    CHECK(flattened.size() == 5);
    const Polygon hull = convex_hull(padded.vertices());
    CHECK(hull.size() == 5);
  }
}

TEST_CASE("hull chain audit") {
  SUBCASE("klein quartic is the extremal case") {
    const HullCoverReport r = hull_cover_audit(klein_quartic_fixture(), 7.0);
    CHECK(r.hypothesis_ok);
    CHECK(r.verdict == "extremal");
    CHECK(r.tight(1e-8));
    CHECK(r.substitutions == 0);
    for (const int n : r.hull_sides) CHECK(n == 7);
    for (const double a : r.hull_areas) CHECK(a == doctest::Approx(pi / 3).epsilon(1e-12));
  }
  SUBCASE("perimeter hypothesis violation is reported, not a chain violation") {
    // Octagon fixture vs k = 18: right average area, oversized perimeter.
    const HullCoverReport r = hull_cover_audit(octagon_genus2_fixture(), 18.0);
    CHECK(!r.hypothesis_ok);
    CHECK(r.verdict == "hypothesis-violation");
    CHECK(r.hypothesis_witness_face == 0);
  }
  SUBCASE("two-face 6/8 patch: Jensen link strict with the frozen slack") {
    // Hexagon and octagon of perimeter P_7; hulls are the polygons
    // themselves. Frozen: 2A(7) - A(6) - A(8) at P = P_7.
    const double P7 = p_k(7.0);
    const std::vector<HullDatum> hulls = {
        {6, area_fixed_perimeter(6.0, P7), P7},
        {8, area_fixed_perimeter(8.0, P7), P7},
    };
    const HullCoverReport r = hull_chain_audit(hulls, 7.0);
    CHECK(r.hypothesis_ok);
    CHECK(r.verdict == "strict-slack");
    CHECK(r.slack_jensen == doctest::Approx(0.0123125002409365).epsilon(1e-10));
    CHECK(std::abs(r.slack_monotone) < 1e-12);  // mean is exactly k
    CHECK(std::abs(r.slack_hull_vs_formula) < 1e-12);
    CHECK(r.slack_cover < 0.0);  // these two polygons cannot tile at A_7
  }
  SUBCASE("realized two-face patch reproduces the annotated chain") {
    const double P7 = p_k(7.0);
    const Polygon hexagon = realize_regular(6, angle_from_perimeter(6.0, P7));
    const Polygon octagon = realize_regular(8, angle_from_perimeter(8.0, P7));
    const std::vector<HullDatum> hulls = {
        {6, area_gauss_bonnet(convex_hull(hexagon.vertices())), perimeter(hexagon)},
        {8, area_gauss_bonnet(convex_hull(octagon.vertices())), perimeter(octagon)},
    };
    const HullCoverReport r = hull_chain_audit(hulls, 7.0);
    CHECK(r.slack_jensen == doctest::Approx(0.0123125002409365).epsilon(1e-8));
    CHECK(std::abs(r.slack_hull_vs_formula) < 1e-9);
  }
  SUBCASE("degenerate hulls use the doubling substitution") {
    const double P7 = p_k(7.0);
    const std::vector<HullDatum> hulls = {
        {1, 0.0, P7},
        {9, area_fixed_perimeter(9.0, P7), P7},
    };
    const HullCoverReport r = hull_chain_audit(hulls, 7.0);
    CHECK(r.substitutions == 1);
    REQUIRE(r.substitution_slacks.size() == 1);
    CHECK(r.substitution_slacks[0] ==
          doctest::Approx(2 * area_fixed_perimeter(4.5, P7) - area_fixed_perimeter(9.0, P7))
              .epsilon(1e-12));
    CHECK(!r.used_direct_bound);
  }
  SUBCASE("running out of large hulls falls back to the direct bound") {
    const double P7 = p_k(7.0);
    const std::vector<HullDatum> hulls = {
        {0, 0.0, P7},
        {5, area_fixed_perimeter(5.0, P7), P7},
    };
    const HullCoverReport r = hull_chain_audit(hulls, 7.0);
    CHECK(r.used_direct_bound);
    CHECK(r.slack_jensen > 0.0);
  }
}

TEST_CASE("total perimeter comparison") {
  SUBCASE("klein quartic at m = k = 7 is all equalities") {
    const AuditReport a = total_perimeter_compare(klein_quartic_fixture(), 7.0, 7.0);
    CHECK(a.passed);
    CHECK(a.grid["equality"] == true);
    CHECK(std::abs(a.grid["slack_1"].get<double>()) < 1e-6);
    CHECK(std::abs(a.grid["slack_2"].get<double>()) < 1e-6);
  }
  SUBCASE("synthetic m = 6.5 surface of area 8 pi: strict middle inequality") {
    TilingGraph t;
    t.total_area = 8 * pi;
    t.vertices.push_back({0, std::nullopt});
    const int n_faces = 48;  // 8 pi / A_{6.5}
    for (int i = 0; i < n_faces; ++i) {
      TilingFace f;
      f.id = i;
      f.area = a_k(6.5);
      f.perimeter = p_k(6.5);
      t.faces.push_back(std::move(f));
    }
    const AuditReport a = total_perimeter_compare(t, 7.0, 6.5);
    CHECK(a.passed);
    CHECK(a.grid["equality"] == false);
    CHECK(std::abs(a.grid["slack_1"].get<double>()) < 1e-9);  // P == P_m here
    CHECK(a.grid["slack_2"].get<double>() > 0.1);             // the ratio link is strict
  }
  SUBCASE("ratio link for grid pairs m < k") {
    for (double m = 6.5; m < 20.0; m += 1.0) {
      for (double k = m + 0.5; k < 21.0; k += 1.5) {
        CHECK(p_k(m) / a_k(m) > p_k(k) / a_k(k));
      }
    }
  }
  CHECK_THROWS_AS(total_perimeter_compare(klein_quartic_fixture(), 6.5, 7.0), DomainError);
}

TEST_CASE("generate_patch") {
  SUBCASE("depth 0 is a single face") {
    const TilingGraph t = generate_patch(7, 0);
    CHECK(t.faces.size() == 1);
    CHECK(t.edges.size() == 7);
    CHECK(t.vertices.size() == 7);
    const ValidationReport v = validate(t);
    CHECK(v.all_ok());
    CHECK(!v.closed);
  }
  SUBCASE("depth 1 of {7,3} has 8 faces") {
    const TilingGraph t = generate_patch(7, 1);
    CHECK(t.faces.size() == 8);
    CHECK(validate(t).all_ok());
  }
  SUBCASE("interior vertices of a depth-3 patch have degree 3 and full angle") {
    const TilingGraph t = generate_patch(7, 3);
    CHECK(validate(t).all_ok());
    // Boundary vertices are those on single-slot edges.
    std::map<int, int> slot_count;
    for (const TilingFace& f : t.faces) {
      for (const int se : f.boundary) slot_count[std::abs(se)]++;
    }
    std::set<int> boundary_vertices;
    for (const TilingEdge& e : t.edges) {
      if (slot_count[e.id] == 1) {
        boundary_vertices.insert(e.a);
        boundary_vertices.insert(e.b);
      }
    }
    std::map<int, double> angle_sum;
    std::map<int, int> corner_count;
    for (const TilingFace& f : t.faces) {
      const std::vector<int> corners = t.face_corners(f);
      for (std::size_t i = 0; i < corners.size(); ++i) {
        angle_sum[corners[i]] += f.realization->interior_angle(i);
        corner_count[corners[i]]++;
      }
    }
    int interior = 0;
    for (const TilingVertex& v : t.vertices) {
      if (boundary_vertices.count(v.id)) continue;
      ++interior;
      CHECK(t.degree(v.id) == 3);
      CHECK(corner_count[v.id] == 3);
      CHECK(angle_sum[v.id] == doctest::Approx(2 * pi).epsilon(1e-8));
    }
    CHECK(interior > 0);
  }
  SUBCASE("faces are congruent regular k-gons") {
    const TilingGraph t = generate_patch(8, 1);
    for (const TilingFace& f : t.faces) {
      REQUIRE(f.realization.has_value());
      CHECK(perimeter(*f.realization) == doctest::Approx(p_k(8)).epsilon(1e-9));
      CHECK(area_gauss_bonnet(*f.realization) == doctest::Approx(a_k(8)).epsilon(1e-9));
    }
  }
  CHECK_THROWS_AS(generate_patch(6, 1), DomainError);
  CHECK_THROWS_AS(generate_patch(7, -1), DomainError);
}
