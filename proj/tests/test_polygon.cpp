#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "doctest.h"
#include "hypertile/polygon.hpp"
#include "test_util.hpp"

using namespace hypertile;
constexpr double pi = std::numbers::pi;

namespace {

// Brute-force hull oracle: a directed Klein chord (i,j) is a hull edge
// iff every other point lies strictly to its left.
std::set<std::size_t> brute_hull_vertex_set(const std::vector<HPoint>& pts) {
  std::vector<KPoint> k(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) k[i] = to_klein(pts[i]);
  const auto cross = [&](std::size_t o, std::size_t a, std::size_t b) {
    return (k[a].x - k[o].x) * (k[b].y - k[o].y) - (k[a].y - k[o].y) * (k[b].x - k[o].x);
  };
  std::set<std::size_t> hull;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      bool all_left = true;
      for (std::size_t m = 0; m < pts.size(); ++m) {
        if (m == i || m == j) continue;
        if (cross(i, j, m) <= 0.0) all_left = false;
      }
      if (all_left) {
        hull.insert(i);
        hull.insert(j);
      }
    }
  }
  return hull;
}

}  // namespace

TEST_CASE("polygon construction rejects bad input") {
  CHECK_THROWS_AS(Polygon({{0.1, 0.1}, {0.2, 0.2}}), InvalidPolygonError);
  CHECK_THROWS_AS(Polygon({{0.1, 0.1}, {0.1, 0.1}, {0.2, 0.0}}), InvalidPolygonError);
  CHECK_THROWS_AS(Polygon({{0.1, 0.1}, {1.2, 0.0}, {0.2, 0.0}}), DomainError);
}

TEST_CASE("realize_regular") {
  SUBCASE("angles all equal theta") {
    const Polygon p = realize_regular(7, 2 * pi / 3);
    CHECK(p.orientation() == 1);
    for (const double a : p.interior_angles()) {
      CHECK(a == doctest::Approx(2 * pi / 3).epsilon(1e-9));
    }
  }
  SUBCASE("Gauss-Bonnet area matches the closed form") {
    CHECK(area_gauss_bonnet(realize_regular(7, 2 * pi / 3)) ==
          doctest::Approx(pi / 3).epsilon(1e-12));
  }
  SUBCASE("measured perimeter matches the closed form up to n = 50") {
    for (int n = 3; n <= 50; ++n) {
      const double theta = 0.5 * (n - 2.0) * pi / n;
      const Polygon p = realize_regular(n, theta);
      const double expect = regular_perimeter({static_cast<double>(n), theta});
      CHECK(perimeter(p) == doctest::Approx(expect).epsilon(1e-8));
      if (n >= 7) {
        const Polygon q = realize_regular(n, 2 * pi / 3);
        CHECK(perimeter(q) == doctest::Approx(p_k(n)).epsilon(1e-8));
      }
    }
  }
  SUBCASE("apothem right triangle has angles (pi/2, pi/n, theta/2)") {
    const int n = 7;
    const double theta = 2 * pi / 3;
    const Polygon p = realize_regular(n, theta);
    const HPoint center{0.0, 0.0};
    const HPoint v = p.vertex(0);
    const HPoint m = midpoint(p.vertex(0), p.vertex(1));
    const Polygon tri({center, m, v});
    const auto angles = tri.interior_angles();
    CHECK(angles[0] == doctest::Approx(pi / n).epsilon(1e-10));
    CHECK(angles[1] == doctest::Approx(pi / 2).epsilon(1e-10));
    CHECK(angles[2] == doctest::Approx(theta / 2).epsilon(1e-10));
  }
  CHECK_THROWS_AS(realize_regular(2, 0.1), DomainError);
  CHECK_THROWS_AS(realize_regular(7, 5 * pi / 7), DomainError);
}

TEST_CASE("area_gauss_bonnet") {
  const Polygon t237 = testutil::realize_triangle(pi / 2, pi / 3, pi / 7);
  CHECK(area_gauss_bonnet(t237) == doctest::Approx(pi / 42).epsilon(1e-12));

  SUBCASE("self-intersecting boundary is rejected") {
    const Polygon bowtie({{-0.3, -0.3}, {0.3, -0.3}, {-0.3, 0.3}, {0.3, 0.3}});
    CHECK(!bowtie.is_simple());
    CHECK_THROWS_AS(area_gauss_bonnet(bowtie), InvalidPolygonError);
  }

  SUBCASE("a flattened vertex changes neither area nor perimeter") {
    const Polygon p = realize_regular(7, 2 * pi / 3);
    std::vector<HPoint> vs = p.vertices();
    vs.insert(vs.begin() + 1, midpoint(p.vertex(0), p.vertex(1)));
    const Polygon padded(vs);
    CHECK(padded.size() == 8);
    CHECK(padded.interior_angle(1) == doctest::Approx(pi).epsilon(1e-12));
    CHECK(area_gauss_bonnet(padded) == doctest::Approx(area_gauss_bonnet(p)).epsilon(1e-10));
    CHECK(perimeter(padded) == doctest::Approx(perimeter(p)).epsilon(1e-12));
  }
}

TEST_CASE("perimeter is isometry-invariant") {
  std::mt19937_64 rng(31);
  const Polygon p = realize_regular(9, 0.5);
  for (int i = 0; i < 50; ++i) {
    const Isometry g = testutil::random_isometry(rng);
    std::vector<HPoint> vs;
    for (const HPoint& v : p.vertices()) vs.push_back(g(v));
    CHECK(perimeter(Polygon(vs)) == doctest::Approx(perimeter(p)).epsilon(1e-10));
  }
}

TEST_CASE("signed_area matches Gauss-Bonnet on simple polygons") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 50; ++i) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const double theta = 0.3 * (n - 2.0) * pi / n;
    const Polygon p = realize_regular(n, theta);
    CHECK(signed_area(p.vertices()) == doctest::Approx(area_gauss_bonnet(p)).epsilon(1e-10));
    CHECK(signed_area(p.reversed().vertices()) ==
          doctest::Approx(-area_gauss_bonnet(p)).epsilon(1e-10));
    // Invariant under translation away from the origin.
    const Isometry g = testutil::random_isometry(rng, false);
    std::vector<HPoint> vs;
    for (const HPoint& v : p.vertices()) vs.push_back(g(v));
    CHECK(signed_area(vs) == doctest::Approx(area_gauss_bonnet(p)).epsilon(1e-9));
  }
}

TEST_CASE("convex_hull") {
  SUBCASE("a convex polygon is its own hull") {
    const Polygon p = realize_regular(6, 1.0);
    const Polygon h = convex_hull(p.vertices());
    CHECK(h.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(convex_contains(h, p.vertex(i), 1e-9));
    CHECK(area_gauss_bonnet(h) == doctest::Approx(area_gauss_bonnet(p)).epsilon(1e-12));
  }

  SUBCASE("reflex quadrilateral hull drops the reflex vertex") {
    const std::vector<HPoint> quad{{0.4, 0.0}, {0.0, 0.4}, {-0.4, 0.0}, {0.0, 0.05}};
    const Polygon poly(quad);
    CHECK(poly.interior_angle(3) > pi);  // reflex
    const Polygon h = convex_hull(quad);
    CHECK(h.size() == 3);
    CHECK(area_gauss_bonnet(h) >= area_gauss_bonnet(poly));
    CHECK(perimeter(h) <= perimeter(poly));
  }

  SUBCASE("matches the brute-force extreme-point oracle") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 4 + rng() % 5;
      std::vector<HPoint> pts;
      for (std::size_t i = 0; i < n; ++i) pts.push_back(testutil::random_point(rng, 0.85));
      const std::set<std::size_t> expect = brute_hull_vertex_set(pts);
      if (expect.size() < 3) continue;
      const Polygon h = convex_hull(pts);
      std::set<std::size_t> got;
      for (const HPoint& v : h.vertices()) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
          if (pts[i] == v) got.insert(i);
        }
      }
      CHECK(got == expect);
    }
  }

  SUBCASE("hull contains the inputs and is idempotent") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<HPoint> pts;
      const std::size_t n = 5 + rng() % 20;
      for (std::size_t i = 0; i < n; ++i) pts.push_back(testutil::random_point(rng, 0.9));
      Polygon h = Polygon({{0.1, 0.0}, {0.0, 0.1}, {-0.1, 0.0}});
      try {
        h = convex_hull(pts);
      } catch (const DegenerateHullError&) {
        continue;
      }
      for (const HPoint& p : pts) CHECK(convex_contains(h, p, 1e-9));
      const Polygon hh = convex_hull(h.vertices());
      CHECK(hh.size() == h.size());
    }
  }

  SUBCASE("collinear and tiny inputs degenerate with a witness") {
    CHECK_THROWS_AS(convex_hull({{0.1, 0.1}, {0.2, 0.2}}), DegenerateHullError);
    // Points on one geodesic: Klein images on one chord.
    const KPoint u{-0.6, 0.2}, v{0.5, -0.3};
    std::vector<HPoint> pts;
    for (const double t : {0.0, 0.25, 0.55, 1.0}) {
      pts.push_back(from_klein({u.x + t * (v.x - u.x), u.y + t * (v.y - u.y)}));
    }
    try {
      convex_hull(pts);
      FAIL("expected DegenerateHullError");
    } catch (const DegenerateHullError& e) {
      REQUIRE(e.witness.size() == 2);
      const std::set<std::size_t> w(e.witness.begin(), e.witness.end());
      CHECK(w == std::set<std::size_t>{0, 3});  // the two extreme inputs
    }
  }
}

TEST_CASE("reduce_equivalent") {
  const Polygon p = realize_regular(7, 2 * pi / 3);
  SUBCASE("drops an inserted midpoint vertex") {
    std::vector<HPoint> vs = p.vertices();
    vs.insert(vs.begin() + 3, midpoint(p.vertex(2), p.vertex(3)));
    const Polygon reduced = reduce_equivalent(Polygon(vs));
    REQUIRE(reduced.size() == 7);
    CHECK(area_gauss_bonnet(reduced) == doctest::Approx(area_gauss_bonnet(p)).epsilon(1e-12));
    CHECK(perimeter(reduced) == doctest::Approx(perimeter(p)).epsilon(1e-12));
  }
  SUBCASE("idempotent and identity on angle-free polygons") {
    const Polygon t = testutil::realize_triangle(pi / 2, pi / 3, pi / 7);
    CHECK(reduce_equivalent(t).size() == 3);
    std::vector<HPoint> vs = p.vertices();
    vs.insert(vs.begin() + 1, midpoint(p.vertex(0), p.vertex(1)));
    vs.insert(vs.begin() + 5, midpoint(p.vertex(3), p.vertex(4)));
    const Polygon once = reduce_equivalent(Polygon(vs));
    const Polygon twice = reduce_equivalent(once);
    CHECK(once.size() == 7);
    CHECK(twice.size() == 7);
  }
}
