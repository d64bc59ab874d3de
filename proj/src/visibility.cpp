#include "dvis/visibility.hpp"

#include <algorithm>
#include <stdexcept>

#include "dvis/errors.hpp"

namespace dvis {

bool sees(const SimplePolygon& poly, const Point& x, const Point& y) {
  if (x == y) return in_closed(poly, x);
  Segment sight(x, y);
  for (int i = 0; i < poly.n(); ++i) {
    SegIntersection z = intersect_segments(sight, poly.edge(i));
    if (z.kind == SegIntersection::Overlap) return false;
    if (z.kind == SegIntersection::At && z.point != x && z.point != y) return false;
  }
  Point mid((x.x + y.x) / 2, (x.y + y.y) / 2);
  return in_open(poly, mid);
}

std::vector<Segment> clip_line_to_polygon(const SimplePolygon& poly, const Point& p,
                                          const Point& q) {
  Point dir = q - p;
  std::vector<Rat> ts;
  for (int i = 0; i < poly.n(); ++i) {
    Segment e = poly.edge(i);
    Point ev = e.q - e.p;
    Rat den = cross(dir, ev);
    if (den != 0) {
      Rat t = cross(e.p - p, ev) / den;
      Rat s = cross(e.p - p, dir) / den;
      if (s >= 0 && s <= 1) ts.push_back(t);
    } else if (orient_sign(p, q, e.p) == 0) {
      ts.push_back(dir.x != 0 ? Rat((e.p.x - p.x) / dir.x) : Rat((e.p.y - p.y) / dir.y));
      ts.push_back(dir.x != 0 ? Rat((e.q.x - p.x) / dir.x) : Rat((e.q.y - p.y) / dir.y));
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  auto at = [&](const Rat& t) { return Point(p.x + t * dir.x, p.y + t * dir.y); };
  std::vector<Segment> out;
  for (size_t k = 0; k + 1 < ts.size(); ++k) {
    Rat mid = (ts[k] + ts[k + 1]) / 2;
    if (classify_point(poly, at(mid)).where == Where::INTERIOR) {
      Point a = at(ts[k]), b = at(ts[k + 1]);
      if (!out.empty() && out.back().q == a)
        out.back().q = b;  // merge adjacent pieces
      else
        out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<int> reflex_vertices(const SimplePolygon& poly) {
  std::vector<int> out;
  for (int i = 0; i < poly.n(); ++i)
    if (poly.is_reflex(i)) out.push_back(i);
  return out;
}

std::vector<Segment> bitangent_segments(const SimplePolygon& poly) {
  std::vector<int> refl = reflex_vertices(poly);
  std::vector<Segment> out;
  auto tangent_at = [&](int v, const Point& u, const Point& w) {
    // both neighbors of vertex v on one closed side of line(u,w)
    int s1 = orient_sign(u, w, poly.vertex(v - 1));
    int s2 = orient_sign(u, w, poly.vertex(v + 1));
    return s1 * s2 >= 0;
  };
  for (size_t i = 0; i < refl.size(); ++i) {
    for (size_t j = i + 1; j < refl.size(); ++j) {
      const Point& u = poly.vertex(refl[i]);
      const Point& w = poly.vertex(refl[j]);
      if (u == w) continue;
      if (!tangent_at(refl[i], u, w) || !tangent_at(refl[j], u, w)) continue;
      std::vector<Segment> clips = clip_line_to_polygon(poly, u, w);
      out.insert(out.end(), clips.begin(), clips.end());
    }
  }
  return out;
}

std::vector<Segment> point_visibility_segments(const SimplePolygon& poly, const Point& s) {
  std::vector<Segment> segs;
  for (int i = 0; i < poly.n(); ++i) segs.push_back(poly.edge(i));
  for (int i = 0; i < poly.n(); ++i) {
    if (poly.vertex(i) == s) continue;
    std::vector<Segment> clips = clip_line_to_polygon(poly, s, poly.vertex(i));
    segs.insert(segs.end(), clips.begin(), clips.end());
  }
  return segs;
}

std::vector<Segment> segment_visibility_segments(const SimplePolygon& poly, const Point& a,
                                                 const Point& b,
                                                 const std::vector<Segment>& bitangents) {
  std::vector<Segment> segs;
  for (int i = 0; i < poly.n(); ++i) segs.push_back(poly.edge(i));
  segs.insert(segs.end(), bitangents.begin(), bitangents.end());
  std::vector<int> refl = reflex_vertices(poly);
  for (const Point* e : {&a, &b}) {
    for (int v : refl) {
      if (poly.vertex(v) == *e) continue;
      std::vector<Segment> clips = clip_line_to_polygon(poly, *e, poly.vertex(v));
      segs.insert(segs.end(), clips.begin(), clips.end());
    }
  }
  if (a != b) {
    std::vector<Segment> clips = clip_line_to_polygon(poly, a, b);
    segs.insert(segs.end(), clips.begin(), clips.end());
  }
  return segs;
}

namespace {

VisPolygon tag_region(const SimplePolygon& poly, Region&& region, const char* what) {
  if (region.faces.size() != 1)
    throw std::logic_error(std::string(what) + ": expected one face, got " +
                           std::to_string(region.faces.size()));
  if (!region.faces[0].holes.empty())
    throw std::logic_error(std::string(what) + ": unexpected hole in visibility region");
  VisPolygon vis;
  vis.poly = region.faces[0].outer;
  vis.tags.resize(vis.poly.n());
  for (int i = 0; i < vis.poly.n(); ++i) {
    Segment ve = vis.poly.edge(i);
    vis.tags[i] = {false, -1};
    for (int e = 0; e < poly.n(); ++e) {
      Segment pe = poly.edge(e);
      if (on_segment(pe.p, pe.q, ve.p) && on_segment(pe.p, pe.q, ve.q)) {
        vis.tags[i] = {true, e};
        break;
      }
    }
  }
  return vis;
}

}  // namespace

VisPolygon visibility_from_point(const SimplePolygon& poly, const Point& s) {
  if (classify_point(poly, s).where == Where::EXTERIOR)
    throw SourceOutside("visibility source outside polygon");
  Region r = build_region(point_visibility_segments(poly, s),
                          [&](const Point& p) { return sees(poly, s, p); });
  return tag_region(poly, std::move(r), "visibility_from_point");
}

bool weak_sees(const SimplePolygon& poly, const Point& a, const Point& b, const Point& y,
               bool open_a, bool open_b, Point* witness) {
  if (a == b) {
    if (open_a || open_b) return false;
    if (sees(poly, a, y)) {
      if (witness) *witness = a;
      return true;
    }
    return false;
  }
  Point d = b - a;

  // Visibility of segment points from y flips only when the sightline sweeps
  // through a polygon vertex; collect those parameters as breakpoints.
  std::vector<Rat> ts;
  ts.push_back(Rat(0));
  ts.push_back(Rat(1));
  for (int i = 0; i < poly.n(); ++i) {
    const Point& v = poly.vertex(i);
    // cross(y - p(t), v - p(t)) = C0 - t*(C1 + C2), p(t) = a + t d
    Rat c0 = cross(y - a, v - a);
    Rat den = cross(y - a, d) + cross(d, v - a);
    if (den == 0) continue;
    Rat t = c0 / den;
    if (t > 0 && t < 1) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  auto at = [&](const Rat& t) { return Point(a.x + t * d.x, a.y + t * d.y); };
  auto usable = [&](const Rat& t) {
    if (open_a && t == 0) return false;
    if (open_b && t == 1) return false;
    return true;
  };

  // candidate params first (covers isolated visible points), then midpoints
  for (const Rat& t : ts) {
    if (!usable(t)) continue;
    Point p = at(t);
    if (sees(poly, p, y)) {
      if (witness) *witness = p;
      return true;
    }
  }
  for (size_t k = 0; k + 1 < ts.size(); ++k) {
    Rat tm = (ts[k] + ts[k + 1]) / 2;
    Point p = at(tm);
    if (sees(poly, p, y)) {
      if (witness) *witness = p;
      return true;
    }
  }
  return false;
}

VisPolygon weak_visibility_from_segment(const SimplePolygon& poly, const Point& a,
                                        const Point& b) {
  auto bpa = boundary_point_of(poly, a);
  auto bpb = boundary_point_of(poly, b);
  if (!bpa || !bpb || !bpa->edge_interior() || !bpb->edge_interior())
    throw SegmentNotOnEdgeInterior("reflector endpoints must lie in one edge interior");
  if (a != b && bpa->edge != bpb->edge)
    throw SegmentNotOnEdgeInterior("reflector endpoints on different edges");
  if (a == b) return visibility_from_point(poly, a);

  std::vector<Segment> bitans = bitangent_segments(poly);
  Region r = build_region(segment_visibility_segments(poly, a, b, bitans),
                          [&](const Point& p) { return weak_sees(poly, a, b, p); });
  return tag_region(poly, std::move(r), "weak_visibility_from_segment");
}

}  // namespace dvis
