#pragma once

#include <array>
#include <vector>

#include "dvis/geom.hpp"

namespace dvis {

// Counterclockwise simple polygon. Edge i joins vertex i to vertex (i+1) % n.
struct SimplePolygon {
  std::vector<Point> vertices;

  SimplePolygon() = default;
  explicit SimplePolygon(std::vector<Point> v) : vertices(std::move(v)) {}

  int n() const { return static_cast<int>(vertices.size()); }
  const Point& vertex(int i) const { return vertices[((i % n()) + n()) % n()]; }
  Segment edge(int i) const { return Segment(vertex(i), vertex(i + 1)); }

  Rat signed_area2() const;  // twice the signed area
  bool is_reflex(int i) const;  // interior angle > pi at vertex i (assumes CCW)
};

// Point on bd(P) addressed as (edge index, parameter t in [0,1]).
struct BoundaryPoint {
  int edge = 0;
  Rat t = 0;

  BoundaryPoint() = default;
  BoundaryPoint(int e, Rat tt) : edge(e), t(std::move(tt)) {}

  // Canonical form has t < 1; t == 1 renormalizes to (edge+1, 0).
  BoundaryPoint canonical(const SimplePolygon& p) const {
    if (t == 1) return BoundaryPoint((edge + 1) % p.n(), Rat(0));
    return *this;
  }
  Point point(const SimplePolygon& p) const {
    Segment e = p.edge(edge);
    return Point(e.p.x + t * (e.q.x - e.p.x), e.p.y + t * (e.q.y - e.p.y));
  }
  bool edge_interior() const { return t > 0 && t < 1; }
};

// Counterclockwise boundary arc from `from` to `to` (int(P) kept to the left).
struct BoundaryArc {
  BoundaryPoint from, to;
};

struct ValidationReport {
  bool closed = false;             // n >= 3, consecutive vertices distinct
  bool simple = false;
  bool ccw = false;
  bool general_position = false;   // no three collinear vertices
  std::vector<std::pair<int, int>> crossing_edges;        // witnesses for non-simplicity
  std::vector<std::array<int, 3>> collinear_triples;      // witnesses against general position

  bool accepted() const { return closed && simple && ccw; }
};

ValidationReport validate(const SimplePolygon& poly);

enum class Where { INTERIOR, BOUNDARY, EXTERIOR };

struct PointLocation {
  Where where = Where::EXTERIOR;
  BoundaryPoint bp;  // canonical; valid when where == BOUNDARY
};

PointLocation classify_point(const SimplePolygon& poly, const Point& p);

inline bool in_closed(const SimplePolygon& poly, const Point& p) {
  return classify_point(poly, p).where != Where::EXTERIOR;
}
inline bool in_open(const SimplePolygon& poly, const Point& p) {
  return classify_point(poly, p).where == Where::INTERIOR;
}

// Locates p on bd(P) exactly; returns canonical address or nothing.
std::optional<BoundaryPoint> boundary_point_of(const SimplePolygon& poly, const Point& p);

// Polyline from arc.from to arc.to, counterclockwise, including all polygon
// vertices strictly inside the arc. bd(p,p) is the single point p.
std::vector<Point> boundary_arc_points(const SimplePolygon& poly, const BoundaryArc& arc);

// First boundary point at which the ray leaves the closed polygon. Grazing
// contacts (vertex touches with the ray continuing inside) are passed over;
// a vertex where the ray exits is reported as (lower incident edge, t = 1).
BoundaryPoint ray_shoot(const SimplePolygon& poly, const Ray& r);

}  // namespace dvis
