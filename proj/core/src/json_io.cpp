#include "hypertile/json_io.hpp"

namespace hypertile {

using nlohmann::json;

json polygon_to_json(const Polygon& p) {
  json verts = json::array();
  for (const HPoint& v : p.vertices()) verts.push_back({v.x, v.y});
  return {{"vertices", verts}, {"model", "poincare-disk"}};
}

Polygon polygon_from_json(const json& j) {
  if (j.value("model", "poincare-disk") != "poincare-disk") {
    throw DomainError("polygon_from_json: unsupported model");
  }
  std::vector<HPoint> vs;
  for (const auto& v : j.at("vertices")) vs.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
  return Polygon(std::move(vs));
}

json tiling_to_json(const TilingGraph& t) {
  json out;
  json vertices = json::array();
  for (const TilingVertex& v : t.vertices) {
    json jv = {{"id", v.id}};
    if (v.lift) jv["lift"] = {v.lift->x, v.lift->y};
    vertices.push_back(std::move(jv));
  }
  json edges = json::array();
  for (const TilingEdge& e : t.edges) edges.push_back({{"id", e.id}, {"v", {e.a, e.b}}});
  json faces = json::array();
  for (const TilingFace& f : t.faces) {
    json jf = {{"id", f.id}, {"boundary", f.boundary}};
    if (f.area) jf["area"] = *f.area;
    if (f.perimeter) jf["perimeter"] = *f.perimeter;
    if (f.realization) {
      json lift = json::array();
      for (const HPoint& v : f.realization->vertices()) lift.push_back({v.x, v.y});
      jf["lift"] = std::move(lift);
    }
    faces.push_back(std::move(jf));
  }
  json meta = json::object();
  if (t.genus) meta["genus"] = *t.genus;
  if (t.total_area) meta["total_area"] = *t.total_area;
  out["vertices"] = std::move(vertices);
  out["edges"] = std::move(edges);
  out["faces"] = std::move(faces);
  out["meta"] = std::move(meta);
  return out;
}

TilingGraph tiling_from_json(const json& j) {
  TilingGraph t;
  for (const auto& jv : j.at("vertices")) {
    TilingVertex v;
    v.id = jv.at("id").get<int>();
    if (jv.contains("lift")) v.lift = HPoint{jv["lift"].at(0).get<double>(), jv["lift"].at(1).get<double>()};
    t.vertices.push_back(v);
  }
  for (const auto& je : j.at("edges")) {
    t.edges.push_back({je.at("id").get<int>(), je.at("v").at(0).get<int>(), je.at("v").at(1).get<int>()});
  }
  for (const auto& jf : j.at("faces")) {
    TilingFace f;
    f.id = jf.at("id").get<int>();
    for (const auto& se : jf.at("boundary")) f.boundary.push_back(se.get<int>());
    if (jf.contains("area")) f.area = jf["area"].get<double>();
    if (jf.contains("perimeter")) f.perimeter = jf["perimeter"].get<double>();
    if (jf.contains("lift")) {
      std::vector<HPoint> vs;
      for (const auto& v : jf["lift"]) vs.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
      f.realization = Polygon(std::move(vs));
    }
    t.faces.push_back(std::move(f));
  }
  if (j.contains("meta")) {
    const auto& meta = j["meta"];
    if (meta.contains("genus")) t.genus = meta["genus"].get<int>();
    if (meta.contains("total_area")) t.total_area = meta["total_area"].get<double>();
  }
  return t;
}

json audit_to_json(const AuditReport& r) {
  json out = {{"check", r.check}, {"passed", r.passed}, {"min_slack", r.min_slack}, {"grid", r.grid}};
  if (r.witness) out["witness"] = *r.witness;
  return out;
}

json hull_cover_to_json(const HullCoverReport& r) {
  json out = {
      {"check", "hull-cover"},
      {"k", r.k},
      {"A_k", r.ak},
      {"P_k", r.pk},
      {"faces", r.n_faces},
      {"hull_sides", r.hull_sides},
      {"hull_areas", r.hull_areas},
      {"face_perimeters", r.face_perimeters},
      {"hypothesis_ok", r.hypothesis_ok},
      {"substitutions", r.substitutions},
      {"used_direct_bound", r.used_direct_bound},
      {"substitution_slacks", r.substitution_slacks},
      {"slack_hull_vs_formula", r.slack_hull_vs_formula},
      {"slack_jensen", r.slack_jensen},
      {"slack_monotone", r.slack_monotone},
      {"slack_cover", r.slack_cover},
      {"verdict", r.verdict},
  };
  if (r.hypothesis_witness_face) out["hypothesis_witness_face"] = *r.hypothesis_witness_face;
  return out;
}

json optimization_to_json(const OptimizationResult& r) {
  return {
      {"polygon", polygon_to_json(r.polygon)},
      {"perimeter", r.perimeter},
      {"area", r.area},
      {"iterations", r.iterations},
      {"converged", r.converged},
      {"restarts_used", r.restarts_used},
      {"benchmark_perimeter", r.benchmark_perimeter},
      {"gap", r.perimeter - r.benchmark_perimeter},
  };
}

}  // namespace hypertile
