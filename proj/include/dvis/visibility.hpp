#pragma once

#include "dvis/region.hpp"

namespace dvis {

// Visibility polygon: a single simply connected face whose boundary edges are
// either portions of bd(P) (lit, tagged with the supporting polygon edge) or
// window chords interior to P.
struct VisPolygon {
  SimplePolygon poly;
  struct Tag {
    bool lit = false;
    int edge = -1;  // polygon edge carrying this boundary edge, when lit
  };
  std::vector<Tag> tags;  // one per edge of poly

  Region to_region() const { return region_of_polygon(poly); }
};

// True iff the open segment (x,y) lies strictly in int(P). Grazing a vertex
// or running along an edge blocks sight. sees(x,x) is true for x in closed P.
bool sees(const SimplePolygon& poly, const Point& x, const Point& y);

// Closed region of points visible from s (s interior or on the boundary).
VisPolygon visibility_from_point(const SimplePolygon& poly, const Point& s);

// Closed region weakly visible from the closed subsegment [a,b] of one edge
// interior; a == b degenerates to visibility_from_point.
VisPolygon weak_visibility_from_segment(const SimplePolygon& poly, const Point& a,
                                        const Point& b);

// Does y see some reflector point p of the segment [a,b] (ends excluded when
// open_a / open_b)? If so and witness != nullptr, a visible point is stored.
bool weak_sees(const SimplePolygon& poly, const Point& a, const Point& b, const Point& y,
               bool open_a = false, bool open_b = false, Point* witness = nullptr);

// Maximal closed subsegments of the line through p,q inside closed P.
std::vector<Segment> clip_line_to_polygon(const SimplePolygon& poly, const Point& p,
                                          const Point& q);

std::vector<int> reflex_vertices(const SimplePolygon& poly);

// Free bitangent carriers: chords of lines through two reflex vertices that
// are locally tangent at both. Cached by callers that reuse them per polygon.
std::vector<Segment> bitangent_segments(const SimplePolygon& poly);

// Critical chord sets whose arrangement faces are visibility-homogeneous.
std::vector<Segment> point_visibility_segments(const SimplePolygon& poly, const Point& s);
std::vector<Segment> segment_visibility_segments(const SimplePolygon& poly, const Point& a,
                                                 const Point& b,
                                                 const std::vector<Segment>& bitangents);

}  // namespace dvis
