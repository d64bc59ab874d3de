#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dvis/errors.hpp"
#include "dvis/polygon.hpp"

using namespace dvis;

namespace {

Point pt(long x, long y) { return Point(Rat(x), Rat(y)); }

SimplePolygon unit_square() {
  return SimplePolygon({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
}

SimplePolygon lshape() {
  return SimplePolygon({pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(1, 2), pt(0, 2)});
}

}  // namespace

TEST_CASE("validate unit square") {
  ValidationReport rep = validate(unit_square());
  CHECK(rep.accepted());
  CHECK(rep.general_position);
}

TEST_CASE("validate rejects clockwise") {
  SimplePolygon cw({pt(0, 0), pt(0, 1), pt(1, 1), pt(1, 0)});
  ValidationReport rep = validate(cw);
  CHECK(rep.simple);
  CHECK(!rep.ccw);
  CHECK(!rep.accepted());
}

TEST_CASE("validate flags collinear triple without rejecting") {
  // hexagon with three collinear vertices along the bottom
  SimplePolygon hex({pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 1), pt(2, 3), pt(0, 2)});
  ValidationReport rep = validate(hex);
  CHECK(rep.accepted());
  CHECK(!rep.general_position);
  REQUIRE(!rep.collinear_triples.empty());
  auto t = rep.collinear_triples[0];
  CHECK(orient(hex.vertex(t[0]), hex.vertex(t[1]), hex.vertex(t[2])) == Orient::COLLINEAR);
}

TEST_CASE("validate detects self intersection") {
  SimplePolygon bow({pt(0, 0), pt(2, 2), pt(2, 0), pt(0, 2)});
  ValidationReport rep = validate(bow);
  CHECK(!rep.simple);
  CHECK(!rep.crossing_edges.empty());
}

TEST_CASE("classify_point on the unit square") {
  SimplePolygon sq = unit_square();
  CHECK(classify_point(sq, Point(Rat(1, 2), Rat(1, 2))).where == Where::INTERIOR);
  PointLocation onb = classify_point(sq, Point(Rat(1), Rat(1, 2)));
  REQUIRE(onb.where == Where::BOUNDARY);
  CHECK(onb.bp.edge == 1);
  CHECK(onb.bp.t == Rat(1, 2));
  CHECK(classify_point(sq, pt(2, 0)).where == Where::EXTERIOR);
}

TEST_CASE("every vertex classifies as boundary") {
  for (const SimplePolygon& p : {unit_square(), lshape()}) {
    for (int i = 0; i < p.n(); ++i) {
      PointLocation loc = classify_point(p, p.vertex(i));
      CHECK(loc.where == Where::BOUNDARY);
      CHECK(loc.bp.point(p) == p.vertex(i));
    }
  }
}

TEST_CASE("boundary arc points around the square top") {
  SimplePolygon sq = unit_square();
  BoundaryArc arc{BoundaryPoint(1, Rat(1, 2)), BoundaryPoint(3, Rat(1, 2))};
  std::vector<Point> chain = boundary_arc_points(sq, arc);
  REQUIRE(chain.size() == 4);
  CHECK(chain[0] == Point(Rat(1), Rat(1, 2)));
  CHECK(chain[1] == pt(1, 1));
  CHECK(chain[2] == pt(0, 1));
  CHECK(chain[3] == Point(Rat(0), Rat(1, 2)));
}

TEST_CASE("degenerate arc is a single point") {
  SimplePolygon sq = unit_square();
  BoundaryArc arc{BoundaryPoint(0, Rat(1, 3)), BoundaryPoint(0, Rat(1, 3))};
  std::vector<Point> chain = boundary_arc_points(sq, arc);
  REQUIRE(chain.size() == 1);
  CHECK(chain[0] == Point(Rat(1, 3), Rat(0)));
}

TEST_CASE("concatenated arcs cover the boundary once") {
  SimplePolygon p = lshape();
  BoundaryPoint u(0, Rat(1, 3)), v(3, Rat(2, 5));
  std::vector<Point> c1 = boundary_arc_points(p, {u, v});
  std::vector<Point> c2 = boundary_arc_points(p, {v, u});
  // shared endpoints, all polygon vertices appear exactly once across both
  CHECK(c1.front() == c2.back());
  CHECK(c1.back() == c2.front());
  int vertex_count = 0;
  for (const auto& chain : {c1, c2})
    for (const Point& q : chain)
      for (int i = 0; i < p.n(); ++i)
        if (q == p.vertex(i)) ++vertex_count;
  CHECK(vertex_count == p.n());
}

TEST_CASE("ray_shoot axis hit") {
  SimplePolygon sq = unit_square();
  BoundaryPoint hit = ray_shoot(sq, Ray(Point(Rat(1, 2), Rat(1, 2)), Point(Rat(1), Rat(1, 2))));
  CHECK(hit.edge == 1);
  CHECK(hit.t == Rat(1, 2));
}

TEST_CASE("ray_shoot vertex hit reports lower incident edge with t=1") {
  SimplePolygon sq = unit_square();
  BoundaryPoint hit = ray_shoot(sq, Ray(Point(Rat(1, 2), Rat(1, 2)), pt(1, 1)));
  CHECK(hit.edge == 1);
  CHECK(hit.t == Rat(1));
  CHECK(hit.point(sq) == pt(1, 1));
}

TEST_CASE("ray_shoot grazes a reflex vertex and continues") {
  // from inside the long arm of the L through the reflex corner (1,1)
  SimplePolygon p = lshape();
  BoundaryPoint hit = ray_shoot(p, Ray(Point(Rat(3, 2), Rat(1, 2)), pt(1, 1)));
  // the ray continues past (1,1) into the upper arm and exits at vertex (0,2)
  CHECK(hit.point(p) == pt(0, 2));
  BoundaryPoint hit2 = ray_shoot(p, Ray(Point(Rat(5, 4), Rat(1, 4)), pt(1, 1)));
  // steeper graze lands in the top edge interior
  CHECK(hit2.point(p) == Point(Rat(2, 3), Rat(2)));
}

TEST_CASE("ray_shoot result lies on the reported edge line") {
  SimplePolygon p = lshape();
  Ray r(Point(Rat(1, 2), Rat(1, 2)), Point(Rat(7, 5), Rat(9, 7)));
  BoundaryPoint hit = ray_shoot(p, r);
  Segment e = p.edge(hit.edge);
  CHECK(orient(e.p, e.q, hit.point(p)) == Orient::COLLINEAR);
}

TEST_CASE("ray_shoot rejects outside origin") {
  CHECK_THROWS_AS(ray_shoot(unit_square(), Ray(pt(5, 5), pt(6, 6))), RayEscapes);
}
