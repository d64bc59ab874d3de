#pragma once

#include <optional>
#include <utility>

#include "dvis/rational.hpp"

namespace dvis {

struct Point {
  Rat x, y;

  Point() : x(0), y(0) {}
  Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

inline Point operator+(const Point& a, const Point& b) { return {Rat(a.x + b.x), Rat(a.y + b.y)}; }
inline Point operator-(const Point& a, const Point& b) { return {Rat(a.x - b.x), Rat(a.y - b.y)}; }
inline Point operator*(const Rat& s, const Point& a) { return {Rat(s * a.x), Rat(s * a.y)}; }

// Lexicographic order, used for canonical keys in maps.
struct PointLess {
  bool operator()(const Point& a, const Point& b) const {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return cmp(a.y, b.y) < 0;
  }
};

inline Rat cross(const Point& u, const Point& v) { return Rat(u.x * v.y - u.y * v.x); }
inline Rat dot(const Point& u, const Point& v) { return Rat(u.x * v.x + u.y * v.y); }

enum class Orient { CW = -1, COLLINEAR = 0, CCW = 1 };

// Sign of the exact cross product of (b-a) and (c-a).
Orient orient(const Point& a, const Point& b, const Point& c);
int orient_sign(const Point& a, const Point& b, const Point& c);

struct Segment {
  Point p, q;
  Segment() = default;
  Segment(Point a, Point b) : p(std::move(a)), q(std::move(b)) {}
  bool degenerate() const { return p == q; }
};

struct Ray {
  Point origin, through;  // origin != through
  Ray(Point o, Point t) : origin(std::move(o)), through(std::move(t)) {}
};

// Exact segment intersection classification.
struct SegIntersection {
  enum Kind { Empty, At, Overlap } kind = Empty;
  Point point;       // valid when kind == At
  Segment overlap;   // valid when kind == Overlap (closed shared subsegment)
};

SegIntersection intersect_segments(const Segment& s1, const Segment& s2);

// True iff p lies on the closed segment [a,b].
bool on_segment(const Point& a, const Point& b, const Point& p);

// Intersection point of the two supporting lines, if unique.
std::optional<Point> line_intersect(const Point& a1, const Point& a2, const Point& b1,
                                    const Point& b2);

// Parameter t with p = a + t*(b-a); requires p collinear with a,b and a != b.
Rat segment_param(const Point& a, const Point& b, const Point& p);

}  // namespace dvis
