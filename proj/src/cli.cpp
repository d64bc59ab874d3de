#include "dvis/cli.hpp"

#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dvis/errors.hpp"
#include "dvis/explorer.hpp"
#include "dvis/io.hpp"
#include "dvis/svg.hpp"

namespace dvis {

namespace {

int cmd_validate(const std::string& path) {
  SimplePolygon poly;
  try {
    poly = polygon_from_json(read_file(path));
  } catch (const std::exception& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return 1;
  }
  ValidationReport rep = validate(poly);
  std::cout << "valid: " << poly.n() << " vertices, ccw\n";
  if (rep.general_position) {
    std::cout << "general position: yes\n";
  } else {
    std::cout << "general position: no";
    if (!rep.collinear_triples.empty()) {
      const auto& t = rep.collinear_triples[0];
      std::cout << " (vertices " << t[0] << "," << t[1] << "," << t[2] << " collinear)";
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_vis(const std::string& path, const std::string& source, const std::string& out) {
  SimplePolygon poly = polygon_from_json(read_file(path));
  VisPolygon vis = visibility_from_point(poly, point_from_arg(source));
  std::string json = region_to_json(vis.to_region());
  if (out.empty())
    std::cout << json << "\n";
  else
    write_file(out, json);
  return 0;
}

int cmd_diffuse(const std::string& path, const std::string& source, int k, bool stages,
                const std::string& out) {
  SimplePolygon poly = polygon_from_json(read_file(path));
  DiffuseStages st = compute_Vk(poly, point_from_arg(source), k);
  std::string json = stages ? stages_to_json(st) : region_to_json(st.last());
  if (out.empty())
    std::cout << json << "\n";
  else
    write_file(out, json);
  return 0;
}

int cmd_holes(const std::string& path, const std::string& source, int k) {
  SimplePolygon poly = polygon_from_json(read_file(path));
  DiffuseStages st = compute_Vk(poly, point_from_arg(source), k);
  std::vector<RegionFace> holes = holes_of(poly, st.last());
  std::cout << holes.size() << (holes.size() == 1 ? " hole\n" : " holes\n");
  for (const RegionFace& h : holes) {
    std::cout << "  hole:";
    for (const Point& p : h.outer.vertices)
      std::cout << " (" << rat_str(p.x) << "," << rat_str(p.y) << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify_paper() {
  LabeledConstruction c = build_counterexample();
  try {
    HoleCertificate cert = verify_theorem(c);
    std::cout << "HOLE VERIFIED: 1 hole (triangle tqr)\n";
    std::cout << "  triangle:";
    for (const Point& p : cert.hole.outer.vertices)
      std::cout << " (" << rat_str(p.x) << "," << rat_str(p.y) << ")";
    std::cout << "\n  constraints:\n" << cert.constraints.summary();
    for (const std::string& note : cert.blocker_notes) std::cout << "  " << note << "\n";
    return 0;
  } catch (const VerificationFailed& e) {
    std::cout << "VERIFICATION FAILED: " << e.what() << "\n";
    std::cout << constraint_check(c).summary();
    return 1;
  }
}

int cmd_oracle_check(const std::string& path, const std::string& source, int k, int m,
                     const std::string& delta_arg) {
  SimplePolygon poly = polygon_from_json(read_file(path));
  Point s = point_from_arg(source);
  Rat delta = delta_arg.empty() ? default_grid_pitch(poly) : rat_parse(delta_arg);
  OracleComparison cmp = compare_with_analytic(poly, s, k, m, delta);
  std::cout << oracle_report_to_json(cmp) << "\n";
  return cmp.soundness_violations == 0 ? 0 : 1;
}

int cmd_census(int n, int count, std::uint64_t seed, int k, const std::string& out,
               bool allow_k1_holes) {
  std::vector<CensusInstance> instances;
  for (int i = 0; i < count; ++i) {
    CensusInstance inst;
    inst.seed = seed + static_cast<std::uint64_t>(i);
    inst.poly = random_simple_polygon(n, inst.seed);
    inst.source = census_source(inst.poly, inst.seed);
    instances.push_back(std::move(inst));
  }
  std::vector<CensusRecord> records = hole_census(instances, k);
  std::string csv = census_csv(records);
  if (out.empty())
    std::cout << csv;
  else
    write_file(out, csv);
  for (const CensusRecord& r : records) {
    if (r.failed) {
      std::cerr << "instance " << r.seed << " failed: " << r.error << "\n";
      return 1;
    }
    if (!allow_k1_holes && r.k1_hole()) {
      std::cerr << "instance " << r.seed
                << " has a hole in V_1; this contradicts the known theorem and almost "
                   "certainly indicates a bug (rerun with --allow-k1-holes to keep going)\n";
      return 1;
    }
  }
  return 0;
}

int cmd_render(const std::string& path, const std::string& region_path,
               const std::string& labels_path, const std::string& out) {
  SimplePolygon poly = polygon_from_json(read_file(path));
  std::vector<Region> stage_regions;
  if (!region_path.empty()) {
    std::string text = read_file(region_path);
    nlohmann::json doc = nlohmann::json::parse(text);
    if (doc.contains("stages")) {
      for (const auto& r : doc["stages"]) stage_regions.push_back(region_from_json(r.dump()));
    } else {
      stage_regions.push_back(region_from_json(text));
    }
  }
  std::optional<RenderLabels> labels;
  if (!labels_path.empty()) {
    nlohmann::json doc = nlohmann::json::parse(read_file(labels_path));
    RenderLabels rl;
    if (doc.contains("s"))
      rl.points.push_back({"s", Point(rat_parse(doc["s"][0].get<std::string>()),
                                      rat_parse(doc["s"][1].get<std::string>()))});
    if (doc.contains("vertices"))
      for (auto it = doc["vertices"].begin(); it != doc["vertices"].end(); ++it)
        rl.points.push_back({it.key(), poly.vertices[it.value().get<int>()]});
    if (doc.contains("triangle")) {
      const char* names[3] = {"t", "q", "r"};
      for (int i = 0; i < 3; ++i)
        rl.points.push_back({names[i], Point(rat_parse(doc["triangle"][i][0].get<std::string>()),
                                             rat_parse(doc["triangle"][i][1].get<std::string>()))});
    }
    labels = rl;
  }
  RenderSpec spec;
  std::string svg = render_svg(poly, stage_regions, {}, labels, spec);
  write_file(out, svg);
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"diffuse-reflection visibility regions in simple polygons"};
  app.require_subcommand(1);

  std::string poly_path, source, out, region_path, labels_path, delta_arg;
  int k = 0, m = 64, n = 12, count = 10;
  std::uint64_t seed = 1;
  bool stages = false, allow_k1 = false;

  auto* c_validate = app.add_subcommand("validate", "validate a polygon JSON file");
  c_validate->add_option("polygon", poly_path)->required();

  auto* c_vis = app.add_subcommand("vis", "visibility polygon from a point");
  c_vis->add_option("polygon", poly_path)->required();
  c_vis->add_option("--source", source)->required();
  c_vis->add_option("-o,--out", out);

  auto* c_diffuse = app.add_subcommand("diffuse", "k-bounce diffuse visibility region");
  c_diffuse->add_option("polygon", poly_path)->required();
  c_diffuse->add_option("--source", source)->required();
  c_diffuse->add_option("-k", k)->required();
  c_diffuse->add_flag("--stages", stages);
  c_diffuse->add_option("-o,--out", out);

  auto* c_holes = app.add_subcommand("holes", "count holes of the k-bounce region");
  c_holes->add_option("polygon", poly_path)->required();
  c_holes->add_option("--source", source)->required();
  c_holes->add_option("-k", k)->required();

  app.add_subcommand("verify-paper", "verify the committed hole construction");

  auto* c_oracle = app.add_subcommand("oracle-check", "discrete oracle soundness check");
  c_oracle->add_option("polygon", poly_path)->required();
  c_oracle->add_option("--source", source)->required();
  c_oracle->add_option("-k", k)->required();
  c_oracle->add_option("-m", m);
  c_oracle->add_option("--delta", delta_arg);

  auto* c_census = app.add_subcommand("census", "hole census over random polygons");
  c_census->add_option("-n", n);
  c_census->add_option("--count", count);
  c_census->add_option("--seed", seed);
  c_census->add_option("-k", k)->required();
  c_census->add_option("-o,--out", out);
  c_census->add_flag("--allow-k1-holes", allow_k1);

  auto* c_render = app.add_subcommand("render", "render polygon and regions to SVG");
  c_render->add_option("polygon", poly_path)->required();
  c_render->add_option("--region", region_path);
  c_render->add_option("--labels", labels_path);
  c_render->add_option("-o,--out", out)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (c_validate->parsed()) return cmd_validate(poly_path);
    if (c_vis->parsed()) return cmd_vis(poly_path, source, out);
    if (c_diffuse->parsed()) return cmd_diffuse(poly_path, source, k, stages, out);
    if (c_holes->parsed()) return cmd_holes(poly_path, source, k);
    if (app.get_subcommand("verify-paper")->parsed()) return cmd_verify_paper();
    if (c_oracle->parsed()) return cmd_oracle_check(poly_path, source, k, m, delta_arg);
    if (c_census->parsed()) return cmd_census(n, count, seed, k, out, allow_k1);
    if (c_render->parsed()) return cmd_render(poly_path, region_path, labels_path, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace dvis
