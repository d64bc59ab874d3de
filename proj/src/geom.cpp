#include "dvis/geom.hpp"

#include <stdexcept>

namespace dvis {

int orient_sign(const Point& a, const Point& b, const Point& c) {
  Rat v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(v);
}

Orient orient(const Point& a, const Point& b, const Point& c) {
  int s = orient_sign(a, b, c);
  return s > 0 ? Orient::CCW : (s < 0 ? Orient::CW : Orient::COLLINEAR);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (orient_sign(a, b, p) != 0) return false;
  if (cmp(min(a.x, b.x), p.x) > 0 || cmp(p.x, max(a.x, b.x)) > 0) return false;
  if (cmp(min(a.y, b.y), p.y) > 0 || cmp(p.y, max(a.y, b.y)) > 0) return false;
  return true;
}

Rat segment_param(const Point& a, const Point& b, const Point& p) {
  if (a.x != b.x) return Rat((p.x - a.x) / (b.x - a.x));
  if (a.y != b.y) return Rat((p.y - a.y) / (b.y - a.y));
  throw std::invalid_argument("segment_param on degenerate segment");
}

std::optional<Point> line_intersect(const Point& a1, const Point& a2, const Point& b1,
                                    const Point& b2) {
  Point da = a2 - a1, db = b2 - b1;
  Rat den = cross(da, db);
  if (den == 0) return std::nullopt;
  Rat t = cross(b1 - a1, db) / den;
  return Point(a1.x + t * da.x, a1.y + t * da.y);
}

SegIntersection intersect_segments(const Segment& s1, const Segment& s2) {
  SegIntersection out;
  const Point &a = s1.p, &b = s1.q, &c = s2.p, &d = s2.q;

  int o1 = orient_sign(a, b, c);
  int o2 = orient_sign(a, b, d);
  int o3 = orient_sign(c, d, a);
  int o4 = orient_sign(c, d, b);

  if (o1 == 0 && o2 == 0) {
    // Collinear (or one side degenerate): overlap is an interval on the line.
    if (s1.degenerate() && s2.degenerate()) {
      if (a == c) { out.kind = SegIntersection::At; out.point = a; }
      return out;
    }
    const Point& ref0 = s1.degenerate() ? c : a;
    const Point& ref1 = s1.degenerate() ? d : b;
    if (!s1.degenerate() && (orient_sign(a, b, d) != 0)) return out;  // point c on line, d off
    Rat ta = segment_param(ref0, ref1, a), tb = segment_param(ref0, ref1, b);
    Rat tc = segment_param(ref0, ref1, c), td = segment_param(ref0, ref1, d);
    Rat lo1 = min(ta, tb), hi1 = max(ta, tb);
    Rat lo2 = min(tc, td), hi2 = max(tc, td);
    Rat lo = max(lo1, lo2), hi = min(hi1, hi2);
    if (lo > hi) return out;
    Point plo(ref0.x + lo * (ref1.x - ref0.x), ref0.y + lo * (ref1.y - ref0.y));
    if (lo == hi) {
      out.kind = SegIntersection::At;
      out.point = plo;
      return out;
    }
    Point phi(ref0.x + hi * (ref1.x - ref0.x), ref0.y + hi * (ref1.y - ref0.y));
    out.kind = SegIntersection::Overlap;
    out.overlap = Segment(plo, phi);
    return out;
  }

  // One endpoint touching the other segment.
  if (o1 == 0 && on_segment(a, b, c)) { out.kind = SegIntersection::At; out.point = c; return out; }
  if (o2 == 0 && on_segment(a, b, d)) { out.kind = SegIntersection::At; out.point = d; return out; }
  if (o3 == 0 && on_segment(c, d, a)) { out.kind = SegIntersection::At; out.point = a; return out; }
  if (o4 == 0 && on_segment(c, d, b)) { out.kind = SegIntersection::At; out.point = b; return out; }

  if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != 0 && o2 != 0 && o3 != 0 &&
      o4 != 0) {
    auto p = line_intersect(a, b, c, d);
    out.kind = SegIntersection::At;
    out.point = *p;
    return out;
  }
  return out;
}

}  // namespace dvis
