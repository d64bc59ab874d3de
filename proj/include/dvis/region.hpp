#pragma once

#include <functional>
#include <vector>

#include "dvis/polygon.hpp"

namespace dvis {

// One connected face: counterclockwise outer boundary plus clockwise holes.
struct RegionFace {
  SimplePolygon outer;
  std::vector<SimplePolygon> holes;

  Rat area2() const;
};

// A finite union of faces with pairwise disjoint interiors. Regions are
// closed point sets (closures of the open sets they are computed from).
struct Region {
  std::vector<RegionFace> faces;

  bool empty() const { return faces.empty(); }
  Rat area2() const;
};

bool region_member(const Region& r, const Point& p);  // closed membership

// Boundary segments of all faces (outer rings and holes).
std::vector<Segment> region_segments(const Region& r);

// Exact overlay workhorse: builds the arrangement of `segments`, classifies
// every bounded face by `inside` evaluated at its interior sample, and
// reassembles the inside faces into a Region (outer rings CCW, holes CW,
// collinear chain vertices merged).
Region build_region(const std::vector<Segment>& segments,
                    const std::function<bool(const Point&)>& inside);

Region region_union(const std::vector<Region>& parts);
Region region_intersection(const Region& a, const Region& b);
Region complement_in(const SimplePolygon& poly, const Region& r);

// Connected components of closure(P \ r) with nonempty interior whose closure
// does not touch bd(P). Pinch-connected faces count as one component.
std::vector<RegionFace> holes_of(const SimplePolygon& poly, const Region& r);

Rat region_xor_area2(const Region& a, const Region& b);
bool region_equal(const Region& a, const Region& b);
bool region_subset(const Region& a, const Region& b);  // a subseteq b as point sets

Region region_of_polygon(const SimplePolygon& poly);

}  // namespace dvis
