#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "dvis/cli.hpp"
#include "dvis/io.hpp"
#include "dvis/svg.hpp"

using namespace dvis;

namespace {

Point pt(long x, long y) { return Point(Rat(x), Rat(y)); }

SimplePolygon lshape() {
  return SimplePolygon({pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(1, 2), pt(0, 2)});
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/dvis_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("polygon json round trip is byte identical for canonical input") {
  SimplePolygon p = lshape();
  std::string one = polygon_to_json(p);
  std::string two = polygon_to_json(polygon_from_json(one));
  CHECK(one == two);
}

TEST_CASE("polygon json accepts rationals and validates orientation") {
  std::string ccw = R"({"vertices":[["0","0"],["3/2","0"],["3/2","1"],["0","1"]]})";
  SimplePolygon p = polygon_from_json(ccw);
  CHECK(p.n() == 4);
  CHECK(p.vertex(1) == Point(Rat(3, 2), Rat(0)));

  std::string cw = R"({"vertices":[["0","0"],["0","1"],["1","1"],["1","0"]]})";
  CHECK_THROWS_WITH_AS(polygon_from_json(cw), "polygon must be counterclockwise",
                       std::runtime_error);

  std::string bow = R"({"vertices":[["0","0"],["2","2"],["2","0"],["0","2"]]})";
  CHECK_THROWS(polygon_from_json(bow));
}

TEST_CASE("region json round trip preserves the region") {
  Region r = region_of_polygon(lshape());
  Region back = region_from_json(region_to_json(r));
  CHECK(region_equal(r, back));
}

TEST_CASE("point argument parsing") {
  Point p = point_from_arg("3/2,-7");
  CHECK(p == Point(Rat(3, 2), Rat(-7)));
  CHECK_THROWS(point_from_arg("12"));
}

TEST_CASE("svg output is deterministic and well formed") {
  SimplePolygon p = lshape();
  RenderSpec spec;
  std::vector<Region> stages = {region_of_polygon(p)};
  std::string a = render_svg(p, stages, {}, std::nullopt, spec);
  std::string b = render_svg(p, stages, {}, std::nullopt, spec);
  CHECK(a == b);
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(a.find("path") != std::string::npos);
}

TEST_CASE("cli: validate, vis, holes, diffuse round trip") {
  TempFile poly("poly.json");
  write_file(poly.path, polygon_to_json(lshape()));

  CHECK(dispatch({"validate", poly.path}) == 0);

  TempFile vis("vis.json");
  CHECK(dispatch({"vis", poly.path, "--source", "3/2,1/2", "-o", vis.path}) == 0);
  Region v0 = region_from_json(read_file(vis.path));
  CHECK(v0.faces.size() == 1);

  CHECK(dispatch({"holes", poly.path, "--source", "3/2,1/2", "-k", "1"}) == 0);

  TempFile stages("stages.json");
  CHECK(dispatch({"diffuse", poly.path, "--source", "3/2,1/2", "-k", "1", "--stages", "-o",
                  stages.path}) == 0);
  std::string text = read_file(stages.path);
  CHECK(text.find("\"stages\"") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 2, domain errors exit 1") {
  CHECK(dispatch({"no-such-command"}) == 2);
  CHECK(dispatch({"vis"}) == 2);
  TempFile bad("bad.json");
  write_file(bad.path, R"({"vertices":[["0","0"],["0","1"],["1","1"],["1","0"]]})");
  CHECK(dispatch({"validate", bad.path}) == 1);
}

TEST_CASE("cli: census determinism") {
  TempFile c1("census1.csv"), c2("census2.csv");
  CHECK(dispatch({"census", "-n", "8", "--count", "2", "--seed", "5", "-k", "1", "-o",
                  c1.path}) == 0);
  CHECK(dispatch({"census", "-n", "8", "--count", "2", "--seed", "5", "-k", "1", "-o",
                  c2.path}) == 0);
  // stable columns (all but millis) must match line by line
  std::istringstream s1(read_file(c1.path)), s2(read_file(c2.path));
  std::string l1, l2;
  while (std::getline(s1, l1) && std::getline(s2, l2)) {
    CHECK(l1.substr(0, l1.rfind(',')) == l2.substr(0, l2.rfind(',')));
  }
}

TEST_CASE("cli: render determinism") {
  TempFile poly("rpoly.json"), svg1("r1.svg"), svg2("r2.svg");
  write_file(poly.path, polygon_to_json(lshape()));
  CHECK(dispatch({"render", poly.path, "-o", svg1.path}) == 0);
  CHECK(dispatch({"render", poly.path, "-o", svg2.path}) == 0);
  CHECK(read_file(svg1.path) == read_file(svg2.path));
}
