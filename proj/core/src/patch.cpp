#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "hypertile/constants.hpp"
#include "hypertile/tiling.hpp"

namespace hypertile {

namespace {

constexpr double pi = std::numbers::pi;

// Point registry with 1e-10 quantization. Keys snap to a grid; lookups
// probe the 3x3 neighborhood so grid-boundary straddles still match.
class QuantizedPoints {
 public:
  explicit QuantizedPoints(double cell = 1e-10) : cell_(cell) {}

  int find_or_insert(const HPoint& p, bool& inserted) {
    const long long ix = std::llround(p.x / cell_), iy = std::llround(p.y / cell_);
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        const auto it = cells_.find({ix + dx, iy + dy});
        if (it == cells_.end()) continue;
        const HPoint& q = points_[it->second];
        if (std::hypot(p.x - q.x, p.y - q.y) < 10.0 * cell_) {
          inserted = false;
          return it->second;
        }
      }
    }
    const int id = static_cast<int>(points_.size());
    points_.push_back(p);
    cells_.emplace(std::make_pair(ix, iy), id);
    inserted = true;
    return id;
  }

  const std::vector<HPoint>& points() const { return points_; }

 private:
  double cell_;
  std::vector<HPoint> points_;
  std::map<std::pair<long long, long long>, int> cells_;
};

}  // namespace

TilingGraph generate_patch(int k, int depth) {
  if (k < 7) throw DomainError("generate_patch: requires k >= 7");
  if (depth < 0) throw DomainError("generate_patch: depth must be nonnegative");

  struct GenFace {
    std::vector<HPoint> verts;
    HPoint center;
    int depth;
  };

  const Polygon seed = realize_regular(k, 2.0 * pi / 3.0);
  QuantizedPoints centers;
  std::vector<GenFace> gen;
  bool fresh = false;
  centers.find_or_insert({0.0, 0.0}, fresh);
  gen.push_back({seed.vertices(), {0.0, 0.0}, 0});

  for (std::size_t i = 0; i < gen.size(); ++i) {
    if (gen[i].depth >= depth) continue;
    const GenFace face = gen[i];  // copy: gen reallocates below
    for (int e = 0; e < k; ++e) {
      const HPoint& a = face.verts[e];
      const HPoint& b = face.verts[(e + 1) % k];
      const Isometry refl = Isometry::geodesic_reflection(a, b);
      const HPoint center = refl(face.center);
      bool inserted = false;
      centers.find_or_insert(center, inserted);
      if (!inserted) continue;
      GenFace nf;
      nf.center = center;
      nf.depth = face.depth + 1;
      nf.verts.resize(k);
      for (int v = 0; v < k; ++v) nf.verts[v] = refl(face.verts[v]);
      std::reverse(nf.verts.begin(), nf.verts.end());  // keep counterclockwise
      for (const HPoint& p : nf.verts) {
        if (p.norm2() > (1.0 - 1e-12) * (1.0 - 1e-12)) {
          throw PrecisionError("generate_patch: coordinates within 1e-12 of the disk "
                               "boundary at depth " + std::to_string(nf.depth),
                               nf.depth);
        }
      }
      gen.push_back(std::move(nf));
    }
  }

  // Combinatorics: dedupe vertices across faces, then edges by vertex pair.
  TilingGraph t;
  QuantizedPoints vreg;
  std::vector<std::vector<int>> face_vertex_ids(gen.size());
  for (std::size_t i = 0; i < gen.size(); ++i) {
    face_vertex_ids[i].reserve(k);
    for (const HPoint& p : gen[i].verts) {
      bool inserted = false;
      face_vertex_ids[i].push_back(vreg.find_or_insert(p, inserted));
    }
  }
  for (std::size_t v = 0; v < vreg.points().size(); ++v) {
    t.vertices.push_back({static_cast<int>(v), vreg.points()[v]});
  }

  std::map<std::pair<int, int>, int> edge_ids;  // unordered pair -> edge id
  for (std::size_t i = 0; i < gen.size(); ++i) {
    TilingFace f;
    f.id = static_cast<int>(i);
    for (int e = 0; e < k; ++e) {
      const int va = face_vertex_ids[i][e];
      const int vb = face_vertex_ids[i][(e + 1) % k];
      const std::pair<int, int> key{std::min(va, vb), std::max(va, vb)};
      auto it = edge_ids.find(key);
      if (it == edge_ids.end()) {
        const int id = static_cast<int>(t.edges.size()) + 1;
        t.edges.push_back({id, va, vb});
        it = edge_ids.emplace(key, id).first;
      }
      const TilingEdge& edge = t.edges[static_cast<std::size_t>(it->second) - 1];
      f.boundary.push_back(edge.a == va ? it->second : -it->second);
    }
    f.realization = Polygon(gen[i].verts);
    t.faces.push_back(std::move(f));
  }
  return t;
}

}  // namespace hypertile
