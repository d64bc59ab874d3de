#include "dvis/polygon.hpp"

#include <algorithm>

#include "dvis/errors.hpp"

namespace dvis {

Rat SimplePolygon::signed_area2() const {
  Rat s(0);
  for (int i = 0; i < n(); ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % n()];
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

bool SimplePolygon::is_reflex(int i) const {
  return orient(vertex(i - 1), vertex(i), vertex(i + 1)) == Orient::CW;
}

ValidationReport validate(const SimplePolygon& poly) {
  ValidationReport rep;
  int n = poly.n();
  rep.closed = n >= 3;
  if (rep.closed) {
    for (int i = 0; i < n; ++i)
      if (poly.vertex(i) == poly.vertex(i + 1)) rep.closed = false;
  }
  if (!rep.closed) return rep;

  rep.simple = true;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      SegIntersection x = intersect_segments(poly.edge(i), poly.edge(j));
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        const Point& shared = (j == i + 1) ? poly.vertex(j) : poly.vertex(0);
        if (x.kind == SegIntersection::Overlap ||
            (x.kind == SegIntersection::At && x.point != shared)) {
          rep.simple = false;
          rep.crossing_edges.push_back({i, j});
        }
      } else if (x.kind != SegIntersection::Empty) {
        rep.simple = false;
        rep.crossing_edges.push_back({i, j});
      }
    }
  }

  rep.ccw = poly.signed_area2() > 0;

  rep.general_position = true;
  for (int i = 0; i < n && static_cast<int>(rep.collinear_triples.size()) < 16; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orient(poly.vertex(i), poly.vertex(j), poly.vertex(k)) == Orient::COLLINEAR) {
          rep.general_position = false;
          if (static_cast<int>(rep.collinear_triples.size()) < 16)
            rep.collinear_triples.push_back({i, j, k});
        }
  return rep;
}

std::optional<BoundaryPoint> boundary_point_of(const SimplePolygon& poly, const Point& p) {
  for (int i = 0; i < poly.n(); ++i) {
    Segment e = poly.edge(i);
    if (on_segment(e.p, e.q, p)) {
      Rat t = segment_param(e.p, e.q, p);
      return BoundaryPoint(i, t).canonical(poly);
    }
  }
  return std::nullopt;
}

PointLocation classify_point(const SimplePolygon& poly, const Point& p) {
  PointLocation loc;
  if (auto bp = boundary_point_of(poly, p)) {
    loc.where = Where::BOUNDARY;
    loc.bp = *bp;
    return loc;
  }
  // Crossing number with a horizontal ray to +x; boundary already excluded,
  // so the half-open rule decides every vertex case exactly.
  int crossings = 0;
  for (int i = 0; i < poly.n(); ++i) {
    Segment e = poly.edge(i);
    bool above1 = e.p.y > p.y;
    bool above2 = e.q.y > p.y;
    if (above1 == above2) continue;
    Rat xint = e.p.x + (p.y - e.p.y) * (e.q.x - e.p.x) / (e.q.y - e.p.y);
    if (xint > p.x) ++crossings;
  }
  loc.where = (crossings % 2 == 1) ? Where::INTERIOR : Where::EXTERIOR;
  return loc;
}

std::vector<Point> boundary_arc_points(const SimplePolygon& poly, const BoundaryArc& arc) {
  int n = poly.n();
  BoundaryPoint a = arc.from.canonical(poly);
  BoundaryPoint b = arc.to.canonical(poly);
  if (a.t < 0 || a.t >= 1 || b.t < 0 || b.t >= 1 || a.edge < 0 || a.edge >= n || b.edge < 0 ||
      b.edge >= n)
    throw EndpointNotOnBoundary("arc endpoint out of range");

  std::vector<Point> chain;
  chain.push_back(a.point(poly));
  if (a.edge == b.edge && a.t == b.t) return chain;  // bd(p,p) is the single point p

  // Arc length in "edge + t" coordinates, measured forward from a.
  Rat delta = Rat(((b.edge - a.edge) % n + n) % n) + b.t - a.t;
  if (delta <= 0) delta += n;

  // Vertices strictly inside the arc sit at forward offsets m - a.t, m = 1, 2, ...
  for (int m = 1; Rat(m) - a.t < delta; ++m)
    chain.push_back(poly.vertex(a.edge + m));
  chain.push_back(b.point(poly));
  return chain;
}

namespace {

struct Contact {
  Rat t_lo, t_hi;   // ray parameters (t_lo == t_hi for point contacts)
  int edge;
  Rat s_lo, s_hi;   // edge parameters at t_lo / t_hi
};

}  // namespace

BoundaryPoint ray_shoot(const SimplePolygon& poly, const Ray& r) {
  if (classify_point(poly, r.origin).where == Where::EXTERIOR)
    throw RayEscapes("ray origin outside polygon");

  Point dir = r.through - r.origin;
  std::vector<Contact> contacts;
  for (int i = 0; i < poly.n(); ++i) {
    Segment e = poly.edge(i);
    Point ev = e.q - e.p;
    Rat den = cross(dir, ev);
    if (den != 0) {
      Rat t = cross(e.p - r.origin, ev) / den;
      Rat s = cross(e.p - r.origin, dir) / den;
      if (t > 0 && s >= 0 && s <= 1) contacts.push_back({t, t, i, s, s});
    } else {
      // parallel; collinear overlap only if e.p on the ray line
      if (orient_sign(r.origin, r.through, e.p) != 0) continue;
      Rat t0 = (dir.x != 0) ? Rat((e.p.x - r.origin.x) / dir.x)
                            : Rat((e.p.y - r.origin.y) / dir.y);
      Rat t1 = (dir.x != 0) ? Rat((e.q.x - r.origin.x) / dir.x)
                            : Rat((e.q.y - r.origin.y) / dir.y);
      Rat s0(0), s1(1);
      if (t0 > t1) { std::swap(t0, t1); std::swap(s0, s1); }
      if (t1 <= 0) continue;
      contacts.push_back({t0, t1, i, s0, s1});
    }
  }
  if (contacts.empty()) throw RayEscapes("ray meets no boundary");

  std::sort(contacts.begin(), contacts.end(),
            [](const Contact& a, const Contact& b) { return a.t_lo < b.t_lo; });

  auto point_at = [&](const Rat& t) {
    return Point(r.origin.x + t * dir.x, r.origin.y + t * dir.y);
  };
  auto address_of = [&](const Contact& c, bool far_end) -> BoundaryPoint {
    Rat s = far_end ? c.s_hi : c.s_lo;
    if (s > 0 && s < 1) return BoundaryPoint(c.edge, s);
    // vertex hit: vertex j reported as (edge j-1, t = 1)
    int j = (s == 0) ? c.edge : (c.edge + 1) % poly.n();
    return BoundaryPoint((j - 1 + poly.n()) % poly.n(), Rat(1));
  };

  for (size_t idx = 0; idx < contacts.size(); ++idx) {
    // merge contacts sharing the same t (vertex touched by two edges)
    size_t jdx = idx;
    Rat hi = contacts[idx].t_hi;
    while (jdx + 1 < contacts.size() && contacts[jdx + 1].t_lo <= hi) {
      ++jdx;
      hi = max(hi, contacts[jdx].t_hi);
    }
    Rat next_t = (jdx + 1 < contacts.size()) ? contacts[jdx + 1].t_lo : Rat(hi + 1);
    Rat mid = (hi + next_t) / 2;
    if (classify_point(poly, point_at(mid)).where == Where::EXTERIOR) {
      // the ray exits within this contact group; report the far-most contact point
      const Contact* best = &contacts[idx];
      for (size_t k = idx; k <= jdx; ++k)
        if (contacts[k].t_hi > best->t_hi) best = &contacts[k];
      return address_of(*best, true);
    }
    idx = jdx;
  }
  throw RayEscapes("ray never exits polygon");
}

}  // namespace dvis
