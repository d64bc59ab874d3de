#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dvis/arrangement.hpp"
#include "dvis/polygon.hpp"

using namespace dvis;

namespace {

Point pt(long x, long y) { return Point(Rat(x), Rat(y)); }

std::vector<Segment> square_segs() {
  return {Segment(pt(0, 0), pt(4, 0)), Segment(pt(4, 0), pt(4, 4)),
          Segment(pt(4, 4), pt(0, 4)), Segment(pt(0, 4), pt(0, 0))};
}

int bounded_faces(const Arrangement& a) {
  int n = 0;
  for (const auto& f : a.faces())
    if (f.bounded()) ++n;
  return n;
}

}  // namespace

TEST_CASE("square arrangement has one bounded face with interior sample") {
  Arrangement arr(square_segs());
  CHECK(arr.vertex_count() == 4);
  REQUIRE(bounded_faces(arr) == 1);
  for (const auto& f : arr.faces()) {
    if (!f.bounded()) continue;
    const Point& s = f.sample;
    CHECK(s.x > 0);
    CHECK(s.x < 4);
    CHECK(s.y > 0);
    CHECK(s.y < 4);
  }
}

TEST_CASE("crossing diagonals split the square into four faces") {
  std::vector<Segment> segs = square_segs();
  segs.emplace_back(pt(0, 0), pt(4, 4));
  segs.emplace_back(pt(0, 4), pt(4, 0));
  Arrangement arr(segs);
  CHECK(arr.vertex_count() == 5);  // center point materializes
  CHECK(bounded_faces(arr) == 4);
}

TEST_CASE("collinear overlapping segments merge into shared atoms") {
  std::vector<Segment> segs = square_segs();
  segs.emplace_back(pt(0, 0), pt(3, 0));  // overlaps the bottom edge
  Arrangement arr(segs);
  CHECK(bounded_faces(arr) == 1);
  CHECK(arr.vertex_count() == 5);  // split point at (3,0)
}

TEST_CASE("island inside a face becomes an inner cycle") {
  std::vector<Segment> segs = square_segs();
  segs.emplace_back(pt(1, 1), pt(2, 1));
  segs.emplace_back(pt(2, 1), pt(2, 2));
  segs.emplace_back(pt(2, 2), pt(1, 2));
  segs.emplace_back(pt(1, 2), pt(1, 1));
  Arrangement arr(segs);
  REQUIRE(bounded_faces(arr) == 2);
  // the outer square face must record the island as an inner cycle
  bool outer_with_island = false;
  for (const auto& f : arr.faces())
    if (f.bounded() && !f.inner_cycles.empty()) outer_with_island = true;
  CHECK(outer_with_island);
}

TEST_CASE("dangling segment keeps faces intact") {
  std::vector<Segment> segs = square_segs();
  segs.emplace_back(pt(1, 1), pt(2, 2));  // antenna, no region boundary
  Arrangement arr(segs);
  CHECK(bounded_faces(arr) == 1);
}

TEST_CASE("face samples are strictly inside their faces") {
  std::vector<Segment> segs = square_segs();
  segs.emplace_back(pt(0, 2), pt(4, 2));
  segs.emplace_back(pt(2, 0), pt(2, 4));
  segs.emplace_back(pt(0, 0), pt(4, 4));
  Arrangement arr(segs);
  CHECK(bounded_faces(arr) == 6);
  for (const auto& f : arr.faces()) {
    if (!f.bounded()) continue;
    // sample must not lie on any input segment
    for (const Segment& s : segs) CHECK(!on_segment(s.p, s.q, f.sample));
  }
}
