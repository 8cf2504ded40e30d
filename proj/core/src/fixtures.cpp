#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "hypertile/formulas.hpp"
#include "hypertile/tiling.hpp"

namespace hypertile {

namespace {

constexpr double pi = std::numbers::pi;

// --- PSL(2,7) -------------------------------------------------------
//
// The 24-heptagon tiling of the genus-3 surface is the quotient of the
// {7,3} tessellation by the kernel of the surjection from the (2,3,7)
// rotation group onto PSL(2,7). Flags correspond to group elements;
// faces, edges and vertices are the cosets of the cyclic subgroups
// generated by an order-7, order-2 and order-3 element with x*y = f.

struct M2 {
  std::array<int, 4> m{1, 0, 0, 1};  // row-major a,b,c,d over F_7

  friend M2 mul(const M2& x, const M2& y) {
    const auto& a = x.m;
    const auto& b = y.m;
    return M2{{(a[0] * b[0] + a[1] * b[2]) % 7, (a[0] * b[1] + a[1] * b[3]) % 7,
               (a[2] * b[0] + a[3] * b[2]) % 7, (a[2] * b[1] + a[3] * b[3]) % 7}};
  }

  // Projective normalization: scale by -1 so the first nonzero entry
  // lies in {1,2,3}.
  void canonicalize() {
    for (int v : m) {
      if (v == 0) continue;
      if (v > 3) {
        for (int& e : m) e = (7 - e) % 7;
      }
      return;
    }
  }
  friend auto operator<=>(const M2&, const M2&) = default;
};

struct Psl27 {
  std::vector<M2> elems;          // canonical, sorted; index = label
  std::vector<int> face_rep;      // label -> label of min element of g<f>
  std::vector<int> edge_rep;      // label -> min of {g, gx}
  std::vector<int> vertex_rep;    // label -> min of g<y>
  std::vector<std::vector<int>> mul_table_f;  // label of g*f^j

  int label(M2 g) const {
    g.canonicalize();
    const auto it = std::lower_bound(elems.begin(), elems.end(), g);
    return static_cast<int>(it - elems.begin());
  }
};

Psl27 build_psl27() {
  Psl27 G;
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 7; ++b) {
      for (int c = 0; c < 7; ++c) {
        for (int d = 0; d < 7; ++d) {
          if ((a * d - b * c) % 7 == 1 || (a * d - b * c) % 7 == 1 - 7) {
            M2 g{{a, b, c, d}};
            g.canonicalize();
            G.elems.push_back(g);
          }
        }
      }
    }
  }
  std::sort(G.elems.begin(), G.elems.end());
  G.elems.erase(std::unique(G.elems.begin(), G.elems.end()), G.elems.end());

  const M2 x{{0, 6, 1, 0}};  // order 2
  const M2 y{{0, 6, 1, 6}};  // order 3
  const M2 f = mul(x, y);    // order 7

  const int n = static_cast<int>(G.elems.size());
  G.face_rep.assign(n, 0);
  G.edge_rep.assign(n, 0);
  G.vertex_rep.assign(n, 0);
  G.mul_table_f.assign(n, std::vector<int>(7));
  for (int i = 0; i < n; ++i) {
    M2 g = G.elems[i];
    // face coset g<f>
    int fr = i;
    M2 gf = g;
    for (int j = 0; j < 7; ++j) {
      G.mul_table_f[i][j] = G.label(gf);
      fr = std::min(fr, G.mul_table_f[i][j]);
      gf = mul(gf, f);
    }
    G.face_rep[i] = fr;
    // edge coset {g, gx}
    G.edge_rep[i] = std::min(i, G.label(mul(g, x)));
    // vertex coset g<y>
    int vr = std::min(i, G.label(mul(g, y)));
    vr = std::min(vr, G.label(mul(mul(g, y), y)));
    G.vertex_rep[i] = vr;
  }
  return G;
}

const M2 kGenX{{0, 6, 1, 0}};

}  // namespace

TilingGraph klein_quartic_fixture() {
  static const Psl27 G = build_psl27();
  const int n = static_cast<int>(G.elems.size());

  // Dense ids for the coset representatives.
  std::map<int, int> face_id, edge_id, vertex_id;
  for (int i = 0; i < n; ++i) {
    if (G.face_rep[i] == i) face_id.emplace(i, static_cast<int>(face_id.size()));
    if (G.vertex_rep[i] == i) vertex_id.emplace(i, static_cast<int>(vertex_id.size()));
  }
  for (int i = 0; i < n; ++i) {
    if (G.edge_rep[i] == i) edge_id.emplace(i, static_cast<int>(edge_id.size()) + 1);
  }

  TilingGraph t;
  t.genus = 3;
  for (const auto& [rep, id] : vertex_id) t.vertices.push_back({id, std::nullopt});
  for (const auto& [rep, id] : edge_id) {
    const int head = G.vertex_rep[rep];
    const int tail = G.vertex_rep[G.label(mul(G.elems[rep], kGenX))];
    t.edges.push_back({id, vertex_id.at(head), vertex_id.at(tail)});
  }

  const Polygon heptagon = realize_regular(7, 2.0 * pi / 3.0);
  for (const auto& [rep, id] : face_id) {
    TilingFace f;
    f.id = id;
    for (int j = 0; j < 7; ++j) {
      const int flag = G.mul_table_f[rep][j];
      const int erep = G.edge_rep[flag];
      const int eid = edge_id.at(erep);
      f.boundary.push_back(flag == erep ? eid : -eid);
    }
    f.realization = heptagon;
    f.area = pi / 3.0;
    t.faces.push_back(std::move(f));
  }
  return t;
}

TilingGraph klein_quartic_area_perturbed(double delta) {
  TilingGraph t = klein_quartic_fixture();
  t.faces.front().area = pi / 3.0 + delta;
  return t;
}

TilingGraph klein_quartic_degree_perturbed() {
  TilingGraph t = klein_quartic_fixture();
  const TilingEdge contracted = t.edges.front();
  const int keep = contracted.a, drop = contracted.b;
  const int eid = contracted.id;
  t.edges.erase(t.edges.begin());
  for (TilingEdge& e : t.edges) {
    if (e.a == drop) e.a = keep;
    if (e.b == drop) e.b = keep;
  }
  std::erase_if(t.vertices, [&](const TilingVertex& v) { return v.id == drop; });
  for (TilingFace& f : t.faces) {
    const auto it = std::find_if(f.boundary.begin(), f.boundary.end(),
                                 [&](int se) { return se == eid || se == -eid; });
    if (it != f.boundary.end()) {
      f.boundary.erase(it);
      // The realization no longer matches the shortened boundary; keep
      // the exact area annotation instead.
      f.realization.reset();
    }
  }
  return t;
}

TilingGraph octagon_genus2_fixture() {
  TilingGraph t;
  t.genus = 2;
  t.vertices.push_back({0, std::nullopt});
  for (int e = 1; e <= 4; ++e) t.edges.push_back({e, 0, 0});
  TilingFace f;
  f.id = 0;
  f.boundary = {1, 2, -1, -2, 3, 4, -3, -4};  // a b a^-1 b^-1 c d c^-1 d^-1
  f.realization = realize_regular(8, pi / 4.0);
  f.area = 4.0 * pi;
  t.faces.push_back(std::move(f));
  return t;
}

TilingGraph square_torus_fixture() {
  TilingGraph t;
  t.genus = 1;  // chi = 0
  t.vertices.push_back({0, std::nullopt});
  t.edges.push_back({1, 0, 0});
  t.edges.push_back({2, 0, 0});
  TilingFace f;
  f.id = 0;
  f.boundary = {1, 2, -1, -2};
  t.faces.push_back(std::move(f));
  return t;
}

}  // namespace hypertile
