#include "dvis/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dvis {

using nlohmann::json;

namespace {

json point_json(const Point& p) { return json::array({rat_str(p.x), rat_str(p.y)}); }

Point point_from(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::runtime_error("point must be a two-element array");
  return Point(rat_parse(j[0].get<std::string>()), rat_parse(j[1].get<std::string>()));
}

json ring_json(const SimplePolygon& p) {
  json arr = json::array();
  for (const Point& v : p.vertices) arr.push_back(point_json(v));
  return arr;
}

SimplePolygon ring_from(const json& j) {
  SimplePolygon p;
  for (const auto& v : j) p.vertices.push_back(point_from(v));
  return p;
}

}  // namespace

SimplePolygon polygon_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("vertices")) throw std::runtime_error("polygon JSON lacks \"vertices\"");
  SimplePolygon p = ring_from(j["vertices"]);
  ValidationReport rep = validate(p);
  if (!rep.closed) throw std::runtime_error("polygon is not a closed chain of >= 3 distinct vertices");
  if (!rep.simple) {
    std::ostringstream msg;
    msg << "polygon boundary is not simple";
    if (!rep.crossing_edges.empty())
      msg << " (edges " << rep.crossing_edges[0].first << " and "
          << rep.crossing_edges[0].second << " intersect)";
    throw std::runtime_error(msg.str());
  }
  if (!rep.ccw) throw std::runtime_error("polygon must be counterclockwise");
  return p;
}

std::string polygon_to_json(const SimplePolygon& poly) {
  json j;
  j["vertices"] = ring_json(poly);
  return j.dump();
}

Region region_from_json(const std::string& text) {
  json j = json::parse(text);
  Region r;
  for (const auto& f : j.at("faces")) {
    RegionFace face;
    face.outer = ring_from(f.at("outer"));
    if (f.contains("holes"))
      for (const auto& h : f["holes"]) face.holes.push_back(ring_from(h));
    r.faces.push_back(std::move(face));
  }
  return r;
}

std::string region_to_json(const Region& r) {
  json faces = json::array();
  for (const RegionFace& f : r.faces) {
    json jf;
    jf["outer"] = ring_json(f.outer);
    json holes = json::array();
    for (const SimplePolygon& h : f.holes) holes.push_back(ring_json(h));
    jf["holes"] = holes;
    faces.push_back(jf);
  }
  json j;
  j["faces"] = faces;
  return j.dump();
}

std::string stages_to_json(const DiffuseStages& st) {
  json stages = json::array();
  for (const Region& r : st.stages) stages.push_back(json::parse(region_to_json(r)));
  json j;
  j["stages"] = stages;
  return j.dump();
}

std::string labels_to_json(const LabeledConstruction& c) {
  json j;
  j["s"] = point_json(c.source);
  json verts;
  for (const auto& [name, idx] : c.vertex_labels) verts[name] = idx;
  j["vertices"] = verts;
  json aux;
  for (const auto& [name, bp] : c.aux_points)
    aux[name] = json::array({bp.edge, rat_str(bp.t)});
  j["aux"] = aux;
  j["triangle"] =
      json::array({point_json(c.triangle[0]), point_json(c.triangle[1]), point_json(c.triangle[2])});
  return j.dump();
}

LabeledConstruction construction_from_json(const std::string& polygon_text,
                                           const std::string& labels_text) {
  LabeledConstruction c;
  c.polygon = polygon_from_json(polygon_text);
  json j = json::parse(labels_text);
  c.source = point_from(j.at("s"));
  for (auto it = j.at("vertices").begin(); it != j.at("vertices").end(); ++it)
    c.vertex_labels[it.key()] = it.value().get<int>();
  for (auto it = j.at("aux").begin(); it != j.at("aux").end(); ++it) {
    const auto& arr = it.value();
    c.aux_points[it.key()] =
        BoundaryPoint(arr[0].get<int>(), rat_parse(arr[1].get<std::string>()));
  }
  const auto& tri = j.at("triangle");
  for (int i = 0; i < 3; ++i) c.triangle[i] = point_from(tri[i]);
  return c;
}

std::string oracle_report_to_json(const OracleComparison& cmp) {
  json j;
  j["oracle_reached"] = cmp.oracle_reached;
  j["soundness_violations"] = cmp.soundness_violations;
  json vw = json::array();
  for (const auto& w : cmp.violation_witnesses)
    vw.push_back(json{{"point", point_json(w.p)}, {"depth", w.depth}});
  j["violation_witnesses"] = vw;
  j["analytic_only"] = cmp.analytic_only;
  json aw = json::array();
  for (const auto& w : cmp.analytic_only_witnesses)
    aw.push_back(json{{"point", point_json(w.p)}, {"depth", w.depth}});
  j["analytic_only_witnesses"] = aw;
  return j.dump();
}

Point point_from_arg(const std::string& arg) {
  size_t comma = arg.find(',');
  if (comma == std::string::npos)
    throw std::runtime_error("expected \"x,y\" with rational components: " + arg);
  return Point(rat_parse(arg.substr(0, comma)), rat_parse(arg.substr(comma + 1)));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace dvis
