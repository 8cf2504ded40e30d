// hypertile: formula evaluation, verification suites, perimeter
// optimization, tiling generation/audits and SVG rendering for the
// regular-polygon isoperimetry toolkit.
//
// Exit codes: 0 all checks passed, 1 a check failed (report emitted),
// 2 usage or domain error.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypertile/constants.hpp"
#include "hypertile/formulas.hpp"
#include "hypertile/isoperimetry.hpp"
#include "hypertile/json_io.hpp"
#include "hypertile/svg.hpp"
#include "hypertile/tiling.hpp"

using nlohmann::json;
using namespace hypertile;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct GridArg {
  double lo = 0.0, hi = 0.0, step = 0.0;
};

GridArg parse_grid(const std::string& s) {
  GridArg g;
  if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &g.lo, &g.hi, &g.step) != 3 || g.lo >= g.hi ||
      g.step <= 0.0) {
    throw CLI::ValidationError("grid", "expected lo:hi:step with lo < hi and step > 0");
  }
  return g;
}

std::string fmt_sig(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16g", v);
  return buf;
}

void emit(const std::string& text, const std::optional<std::string>& out_path) {
  if (out_path) {
    std::ofstream out(*out_path);
    if (!out) throw std::runtime_error("cannot write " + *out_path);
    out << text;
  } else {
    std::cout << text;
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HYPERTILE_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

json defaults_header() {
  return {
      {"eps_geom", eps_geom},
      {"eps_angle", eps_angle},
      {"tol_opt", tol_opt},
      {"tol_area", tol_area},
      {"optimizer_restarts", 8},
      {"grids",
       {{"concavity", "2:200:0.25"},
        {"doubling", "k:400:0.25"},
        {"ratio", "6.01:100:0.05"},
        {"monotone_n_max", 50}}},
  };
}

Polygon load_polygon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  json j;
  in >> j;
  return polygon_from_json(j);
}

int run_eval(const std::optional<double>& ak, const std::optional<double>& pk,
             const std::vector<double>& area_args, const std::vector<double>& perim_args,
             const std::vector<double>& heron_args, const std::vector<double>& side_args,
             const std::vector<double>& afp_args, const std::vector<double>& theta_args,
             const std::optional<std::string>& poly_area_path,
             const std::optional<std::string>& poly_perimeter_path, const std::string& format,
             const std::optional<std::string>& out_path) {
  std::string quantity;
  json inputs;
  double value = 0.0;
  if (poly_area_path) {
    quantity = "polygon_area";
    inputs = {{"file", *poly_area_path}};
    value = area_gauss_bonnet(load_polygon(*poly_area_path));
  } else if (poly_perimeter_path) {
    quantity = "polygon_perimeter";
    inputs = {{"file", *poly_perimeter_path}};
    value = perimeter(load_polygon(*poly_perimeter_path));
  } else if (ak) {
    quantity = "A_k";
    inputs = {{"k", *ak}};
    value = a_k(*ak);
  } else if (pk) {
    quantity = "P_k";
    inputs = {{"k", *pk}};
    value = p_k(*pk);
  } else if (!area_args.empty()) {
    quantity = "A(n,theta)";
    inputs = {{"n", area_args[0]}, {"theta", area_args[1]}};
    value = regular_area({area_args[0], area_args[1]});
  } else if (!perim_args.empty()) {
    quantity = "P(n,theta)";
    inputs = {{"n", perim_args[0]}, {"theta", perim_args[1]}};
    value = regular_perimeter({perim_args[0], perim_args[1]});
  } else if (!heron_args.empty()) {
    quantity = "heron_area";
    inputs = {{"x", heron_args[0]}, {"y", heron_args[1]}, {"z", heron_args[2]}};
    value = heron_area(heron_args[0], heron_args[1], heron_args[2]);
  } else if (!side_args.empty()) {
    quantity = "side_opposite";
    inputs = {{"t1", side_args[0]}, {"t2", side_args[1]}, {"t3", side_args[2]}};
    value = side_opposite(side_args[0], side_args[1], side_args[2]);
  } else if (!afp_args.empty()) {
    quantity = "A(n)";
    inputs = {{"n", afp_args[0]}, {"P", afp_args[1]}};
    value = area_fixed_perimeter(afp_args[0], afp_args[1]);
  } else if (!theta_args.empty()) {
    quantity = "theta(n,P)";
    inputs = {{"n", theta_args[0]}, {"P", theta_args[1]}};
    value = angle_from_perimeter(theta_args[0], theta_args[1]);
  } else {
    std::cerr << "eval: pick one of --Ak --Pk --area --perimeter --heron --side --afp --theta "
                 "--poly-area --poly-perimeter\n";
    return kExitUsage;
  }
  if (format == "json") {
    const json out = {{"quantity", quantity}, {"inputs", inputs}, {"value", value}};
    emit(out.dump(2) + "\n", out_path);
  } else {
    emit(fmt_sig(value) + "\n", out_path);
  }
  return kExitOk;
}

int run_verify(std::vector<std::string> checks, bool all, const std::optional<double>& p_opt,
               const std::optional<double>& k_opt, const std::optional<double>& area_opt,
               int n_max, const std::optional<std::string>& grid_opt, const std::string& format,
               const std::optional<std::string>& out_path) {
  if (all) checks = {"concavity", "doubling", "monotone", "ratio", "sextic"};
  if (checks.empty()) {
    std::cerr << "verify: nothing selected; use --all or --check NAME\n";
    return kExitUsage;
  }
  std::sort(checks.begin(), checks.end());  // fixed report order
  std::vector<AuditReport> reports;
  for (const std::string& name : checks) {
    if (name == "concavity") {
      const double P = p_opt.value_or(p_k(7.0));
      GridArg g{2.0, 200.0, 0.25};
      if (grid_opt) g = parse_grid(*grid_opt);
      reports.push_back(verify_concavity(P, g.lo, g.hi, g.step));
    } else if (name == "doubling") {
      const double k = k_opt.value_or(7.0);
      GridArg g{k, 400.0, 0.25};
      if (grid_opt) g = parse_grid(*grid_opt);
      reports.push_back(verify_doubling(k, g.hi, g.step));
    } else if (name == "monotone") {
      reports.push_back(verify_regular_monotone(area_opt.value_or(a_k(7.0)), n_max));
    } else if (name == "ratio") {
      GridArg g{6.01, 100.0, 0.05};
      if (grid_opt) g = parse_grid(*grid_opt);
      reports.push_back(perimeter_ratio_scan(g.lo, g.hi, g.step));
    } else if (name == "sextic") {
      reports.push_back(sextic_check());
    } else {
      std::cerr << "verify: unknown check '" << name << "'\n";
      return kExitUsage;
    }
  }
  bool all_passed = true;
  json jreports = json::array();
  for (const AuditReport& r : reports) {
    all_passed = all_passed && r.passed;
    jreports.push_back(audit_to_json(r));
  }
  if (format == "text") {
    std::string text;
    for (const AuditReport& r : reports) {
      text += (r.passed ? "[PASS] " : "[FAIL] ") + r.check +
              " min_slack=" + fmt_sig(r.min_slack) + "\n";
    }
    emit(text, out_path);
  } else {
    const json out = {{"header", defaults_header()}, {"reports", jreports}};
    emit(out.dump(2) + "\n", out_path);
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

int run_optimize(int n, double area, std::uint64_t seed, int restarts, const std::string& format,
                 const std::optional<std::string>& out_path) {
  const OptimizationResult r = min_perimeter_polygon(n, area, seed, restarts);
  json out = optimization_to_json(r);
  out["header"] = defaults_header();
  out["seed"] = seed;
  if (format == "text") {
    std::string text = std::string(r.converged ? "converged" : "NOT converged") +
                       " perimeter=" + fmt_sig(r.perimeter) + " benchmark=" +
                       fmt_sig(r.benchmark_perimeter) +
                       " gap=" + fmt_sig(r.perimeter - r.benchmark_perimeter) + "\n";
    emit(text, out_path);
  } else {
    emit(out.dump(2) + "\n", out_path);
  }
  return r.converged ? kExitOk : kExitCheckFailed;
}

int run_tile(const std::optional<int>& k, int depth, const std::optional<std::string>& fixture,
             const std::optional<std::string>& in_path, const std::vector<std::string>& audits,
             const std::optional<std::string>& svg_path, const std::optional<std::string>& out_path,
             const std::optional<double>& k_audit) {
  TilingGraph t;
  if (fixture) {
    if (*fixture == "klein-quartic") {
      t = klein_quartic_fixture();
    } else if (*fixture == "octagon-genus2") {
      t = octagon_genus2_fixture();
    } else if (*fixture == "square-torus") {
      t = square_torus_fixture();
    } else {
      std::cerr << "tile: unknown fixture '" << *fixture
                << "' (klein-quartic, octagon-genus2, square-torus)\n";
      return kExitUsage;
    }
  } else if (in_path) {
    std::ifstream in(*in_path);
    if (!in) {
      std::cerr << "tile: cannot read " << *in_path << "\n";
      return kExitUsage;
    }
    json j;
    in >> j;
    t = tiling_from_json(j);
  } else if (k) {
    t = generate_patch(*k, depth);
  } else {
    std::cerr << "tile: need --k/--depth, --fixture or --in\n";
    return kExitUsage;
  }

  if (out_path) emit(tiling_to_json(t).dump(2) + "\n", out_path);
  if (svg_path) emit(render_svg(t), svg_path);
  if (!out_path && !svg_path && audits.empty()) {
    emit(tiling_to_json(t).dump(2) + "\n", std::nullopt);
  }

  if (audits.empty()) return kExitOk;

  // Audits: structural validation always runs first; k defaults to the
  // value matching the average face area.
  bool all_passed = true;
  json jreports = json::array();
  const ValidationReport v = validate(t);
  jreports.push_back({{"check", "invariants"},
                      {"passed", v.all_ok()},
                      {"min_slack", v.all_ok() ? 1.0 : -1.0},
                      {"grid",
                       {{"edge_slots_ok", v.edge_slots_ok},
                        {"degrees_ok", v.degrees_ok},
                        {"connected_ok", v.connected_ok},
                        {"chain_ok", v.chain_ok},
                        {"geometry_ok", v.geometry_ok},
                        {"closed", v.closed},
                        {"detail", v.detail}}}});
  all_passed = all_passed && v.all_ok();

  std::vector<std::string> selected = audits;
  if (selected.size() == 1 && selected[0] == "all") {
    selected = {"euler", "gauss-bonnet", "degrees", "hull-cover"};
  }
  double k_for_audit = 0.0;
  if (k_audit) {
    k_for_audit = *k_audit;
  } else if (!t.faces.empty()) {
    try {
      double total = 0.0;
      for (const TilingFace& f : t.faces) total += t.face_area(f);
      k_for_audit = 6.0 + 3.0 * (total / t.faces.size()) / std::numbers::pi;
    } catch (const std::exception&) {
      k_for_audit = 7.0;
    }
  }

  for (const std::string& name : selected) {
    try {
      if (name == "euler") {
        const int chi = euler_characteristic(t);
        jreports.push_back({{"check", "euler"},
                            {"passed", true},
                            {"min_slack", 0.0},
                            {"grid", {{"chi", chi}}}});
      } else if (name == "gauss-bonnet") {
        const AuditReport r = gauss_bonnet_audit(t);
        all_passed = all_passed && r.passed;
        jreports.push_back(audit_to_json(r));
      } else if (name == "degrees") {
        const AuditReport r = degree_audit(t, k_for_audit);
        all_passed = all_passed && r.passed;
        jreports.push_back(audit_to_json(r));
      } else if (name == "hull-cover") {
        const HullCoverReport r = hull_cover_audit(t, k_for_audit);
        all_passed = all_passed && r.hypothesis_ok && r.slack_cover > -1e-8;
        jreports.push_back(hull_cover_to_json(r));
      } else if (name == "concave-angles") {
        for (const TilingFace& f : t.faces) {
          const AuditReport r = concave_angle_audit(t, f.id, k_for_audit);
          all_passed = all_passed && r.passed;
          jreports.push_back(audit_to_json(r));
        }
      } else {
        std::cerr << "tile: unknown audit '" << name << "'\n";
        return kExitUsage;
      }
    } catch (const std::exception& e) {
      all_passed = false;
      jreports.push_back({{"check", name}, {"passed", false}, {"error", e.what()}});
    }
  }
  const json out = {{"header", defaults_header()}, {"k", k_for_audit}, {"reports", jreports}};
  std::cout << out.dump(2) << "\n";
  return all_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolic regular-tile isoperimetry toolkit"};
  app.require_subcommand(1);
  std::string format = "text";
  std::optional<std::string> out_path;

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a closed-form quantity");
  std::optional<double> ak, pk;
  std::vector<double> area_args, perim_args, heron_args, side_args, afp_args, theta_args;
  eval->add_option("--Ak", ak, "A_k for real k > 6");
  eval->add_option("--Pk", pk, "P_k for real k > 6");
  eval->add_option("--area", area_args, "regular area: n theta")->expected(2);
  eval->add_option("--perimeter", perim_args, "regular perimeter: n theta")->expected(2);
  eval->add_option("--heron", heron_args, "triangle area from sides: x y z")->expected(3);
  eval->add_option("--side", side_args, "side opposite t3: t1 t2 t3")->expected(3);
  eval->add_option("--afp", afp_args, "area at fixed perimeter: n P")->expected(2);
  eval->add_option("--theta", theta_args, "angle from perimeter: n P")->expected(2);
  std::optional<std::string> poly_area_path, poly_perimeter_path;
  eval->add_option("--poly-area", poly_area_path, "measured area of a polygon JSON file");
  eval->add_option("--poly-perimeter", poly_perimeter_path,
                   "measured perimeter of a polygon JSON file");
  eval->add_option("--format", format, "text | json");
  eval->add_option("--out", out_path, "write to file instead of stdout");

  // verify
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> checks;
  bool all = false;
  std::optional<double> p_opt, k_opt, area_opt;
  std::optional<std::string> grid_opt;
  int n_max = 50;
  verify->add_flag("--all", all, "run every check with defaults");
  verify->add_option("--check", checks, "concavity | doubling | monotone | ratio | sextic");
  verify->add_option("--P", p_opt, "fixed perimeter for concavity");
  verify->add_option("--k", k_opt, "k for doubling");
  verify->add_option("--area", area_opt, "fixed area for monotone");
  verify->add_option("--n-max", n_max, "upper side count for monotone");
  verify->add_option("--grid", grid_opt, "lo:hi:step override");
  verify->add_option("--format", format, "text | json");
  verify->add_option("--out", out_path, "write to file instead of stdout");

  // optimize
  auto* optimize = app.add_subcommand("optimize", "minimum-perimeter n-gon of given area");
  int opt_n = 0;
  double opt_area = 0.0;
  std::uint64_t seed = default_seed();
  int restarts = 8;
  optimize->add_option("--n", opt_n, "side count")->required();
  optimize->add_option("--area", opt_area, "target area")->required();
  optimize->add_option("--seed", seed, "deterministic seed (env HYPERTILE_SEED fallback)");
  optimize->add_option("--restarts", restarts, "random restarts");
  optimize->add_option("--format", format, "text | json");
  optimize->add_option("--out", out_path, "write to file instead of stdout");

  // tile
  auto* tile = app.add_subcommand("tile", "generate, load, audit and render tilings");
  std::optional<int> tile_k;
  int depth = 0;
  std::optional<std::string> fixture, in_path, svg_path;
  std::vector<std::string> audits;
  std::optional<double> k_audit;
  tile->add_option("--k", tile_k, "patch: regular k-gon tiling, k >= 7");
  tile->add_option("--depth", depth, "patch expansion depth");
  tile->add_option("--fixture", fixture, "klein-quartic | octagon-genus2 | square-torus");
  tile->add_option("--in", in_path, "load tiling JSON");
  tile->add_option("--audit", audits, "all | euler | gauss-bonnet | degrees | hull-cover | concave-angles");
  tile->add_option("--svg", svg_path, "render the disk patch to SVG");
  tile->add_option("--out", out_path, "write tiling JSON to file");
  tile->add_option("--k-audit", k_audit, "k for audits (default: from average area)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) {
      return run_eval(ak, pk, area_args, perim_args, heron_args, side_args, afp_args, theta_args,
                      poly_area_path, poly_perimeter_path, format, out_path);
    }
    if (verify->parsed()) {
      return run_verify(checks, all, p_opt, k_opt, area_opt, n_max, grid_opt, format, out_path);
    }
    if (optimize->parsed()) {
      return run_optimize(opt_n, opt_area, seed, restarts, format, out_path);
    }
    if (tile->parsed()) {
      return run_tile(tile_k, depth, fixture, in_path, audits, svg_path, out_path, k_audit);
    }
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
