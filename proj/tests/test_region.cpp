#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dvis/region.hpp"

using namespace dvis;

namespace {

Point pt(long x, long y) { return Point(Rat(x), Rat(y)); }

Region rect(long x0, long y0, long x1, long y1) {
  return region_of_polygon(SimplePolygon({pt(x0, y0), pt(x1, y0), pt(x1, y1), pt(x0, y1)}));
}

SimplePolygon big_square() {
  return SimplePolygon({pt(0, 0), pt(10, 0), pt(10, 10), pt(0, 10)});
}

}  // namespace

TEST_CASE("union of one part is the part") {
  Region r = rect(0, 0, 3, 2);
  Region u = region_union({r});
  CHECK(u.faces.size() == 1);
  CHECK(u.faces[0].holes.empty());
  CHECK(u.area2() == r.area2());
  CHECK(region_equal(u, r));
}

TEST_CASE("two overlapping rectangles: inclusion-exclusion is exact") {
  Region a = rect(0, 0, 2, 2);
  Region b = rect(1, 1, 3, 3);
  Region u = region_union({a, b});
  CHECK(u.faces.size() == 1);
  CHECK(u.area2() == Rat(2 * (4 + 4 - 1)));
  // union membership at exact points
  CHECK(region_member(u, Point(Rat(1, 2), Rat(1, 2))));
  CHECK(region_member(u, Point(Rat(5, 2), Rat(5, 2))));
  CHECK(region_member(u, pt(1, 1)));
  CHECK(!region_member(u, Point(Rat(5, 2), Rat(1, 2))));
}

TEST_CASE("disjoint parts stay separate faces") {
  Region u = region_union({rect(0, 0, 1, 1), rect(3, 0, 4, 1)});
  CHECK(u.faces.size() == 2);
  CHECK(u.area2() == Rat(4));
}

TEST_CASE("union is commutative as a point set") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(0, 8);
  for (int round = 0; round < 20; ++round) {
    long x0 = c(rng), y0 = c(rng), x1 = x0 + 1 + c(rng) % 3, y1 = y0 + 1 + c(rng) % 3;
    long a0 = c(rng), b0 = c(rng), a1 = a0 + 1 + c(rng) % 3, b1 = b0 + 1 + c(rng) % 3;
    Region u1 = region_union({rect(x0, y0, x1, y1), rect(a0, b0, a1, b1)});
    Region u2 = region_union({rect(a0, b0, a1, b1), rect(x0, y0, x1, y1)});
    CHECK(region_equal(u1, u2));
    // inclusion-exclusion with exact overlap area
    Rat ox = max(Rat(0), Rat(min(Rat(x1), Rat(a1)) - max(Rat(x0), Rat(a0))));
    Rat oy = max(Rat(0), Rat(min(Rat(y1), Rat(b1)) - max(Rat(y0), Rat(b0))));
    Rat expect = Rat(2 * (x1 - x0) * (y1 - y0)) + Rat(2 * (a1 - a0) * (b1 - b0)) - 2 * ox * oy;
    CHECK(u1.area2() == expect);
  }
}

TEST_CASE("complement of P in P is empty, complement of empty is P") {
  SimplePolygon p = big_square();
  Region all = region_of_polygon(p);
  CHECK(complement_in(p, all).empty());
  Region none;
  Region c = complement_in(p, none);
  CHECK(c.faces.size() == 1);
  CHECK(region_equal(c, all));
}

TEST_CASE("double complement restores the region") {
  SimplePolygon p = big_square();
  Region r = region_union({rect(1, 1, 4, 4), rect(6, 2, 9, 5)});
  Region back = complement_in(p, complement_in(p, r));
  CHECK(region_equal(back, r));
}

TEST_CASE("frame union yields a face with a hole; holes_of finds it") {
  SimplePolygon p = big_square();
  // a 1-thick frame around (2,2)-(8,8)
  Region frame = region_union({rect(1, 1, 9, 2), rect(1, 8, 9, 9), rect(1, 2, 2, 8), rect(8, 2, 9, 8)});
  REQUIRE(frame.faces.size() == 1);
  REQUIRE(frame.faces[0].holes.size() == 1);
  CHECK(frame.faces[0].holes[0].signed_area2() == Rat(-2 * 36));

  std::vector<RegionFace> holes = holes_of(p, frame);
  REQUIRE(holes.size() == 1);
  CHECK(holes[0].area2() == Rat(2 * 36));

  // the surrounding moat touches bd(P), so it is not a hole
  Region comp = complement_in(p, frame);
  CHECK(comp.faces.size() == 2);
}

TEST_CASE("holes_of: full region has no holes") {
  SimplePolygon p = big_square();
  CHECK(holes_of(p, region_of_polygon(p)).empty());
}

TEST_CASE("union face edges lie on input boundary lines") {
  Region a = rect(0, 0, 4, 3);
  Region b = rect(2, 1, 6, 5);
  Region u = region_union({a, b});
  std::vector<Segment> inputs = region_segments(a);
  std::vector<Segment> sb = region_segments(b);
  inputs.insert(inputs.end(), sb.begin(), sb.end());
  for (const Segment& s : region_segments(u)) {
    bool on_some = false;
    for (const Segment& in : inputs) {
      if (orient(in.p, in.q, s.p) == Orient::COLLINEAR &&
          orient(in.p, in.q, s.q) == Orient::COLLINEAR) {
        on_some = true;
        break;
      }
    }
    CHECK(on_some);
  }
}

TEST_CASE("region membership honors closure") {
  Region r = rect(0, 0, 2, 2);
  CHECK(region_member(r, pt(0, 0)));
  CHECK(region_member(r, Point(Rat(2), Rat(1))));
  CHECK(!region_member(r, Point(Rat(2) + Rat(1, 1000000), Rat(1))));
}

TEST_CASE("subset and equality predicates") {
  Region small = rect(1, 1, 2, 2);
  Region large = rect(0, 0, 3, 3);
  CHECK(region_subset(small, large));
  CHECK(!region_subset(large, small));
  CHECK(region_equal(large, rect(0, 0, 3, 3)));
}
