#pragma once

#include <array>

#include "dvis/polygon.hpp"

namespace dvis {

// Ear-clipping triangulation; straight (collinear) vertices are skipped, so a
// triangle fan may reference a subset of the polygon's vertices.
std::vector<std::array<int, 3>> triangulate(const SimplePolygon& poly);

// Euclidean shortest path between a and b inside the closed polygon. Interior
// path vertices are reflex vertices of P. Computed combinatorially (funnel
// over the triangulation); only orientation predicates are evaluated.
std::vector<Point> geodesic(const SimplePolygon& poly, const Point& a, const Point& b);

// p lies on the path polyline (vertex or edge-interior point).
bool path_contains(const std::vector<Point>& path, const Point& p);

}  // namespace dvis
