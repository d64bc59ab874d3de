#include "dvis/diffuse.hpp"

#include <algorithm>
#include <stdexcept>

#include "dvis/errors.hpp"

namespace dvis {

LitSet lit_segments(const SimplePolygon& poly, const Region& r) {
  LitSet lit;
  lit.per_edge.resize(poly.n());
  std::vector<Segment> rsegs = region_segments(r);

  for (int i = 0; i < poly.n(); ++i) {
    Segment e = poly.edge(i);
    std::vector<Rat> ts = {Rat(0), Rat(1)};
    for (const Segment& s : rsegs) {
      SegIntersection x = intersect_segments(e, s);
      if (x.kind == SegIntersection::At)
        ts.push_back(segment_param(e.p, e.q, x.point));
      else if (x.kind == SegIntersection::Overlap) {
        ts.push_back(segment_param(e.p, e.q, x.overlap.p));
        ts.push_back(segment_param(e.p, e.q, x.overlap.q));
      }
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    auto at = [&](const Rat& t) {
      return Point(e.p.x + t * (e.q.x - e.p.x), e.p.y + t * (e.q.y - e.p.y));
    };

    std::vector<LitSet::Piece> pieces;
    std::vector<char> t_lit(ts.size());
    for (size_t k = 0; k < ts.size(); ++k) t_lit[k] = region_member(r, at(ts[k])) ? 1 : 0;

    for (size_t k = 0; k + 1 < ts.size(); ++k) {
      Rat mid = (ts[k] + ts[k + 1]) / 2;
      if (region_member(r, at(mid))) {
        if (!pieces.empty() && pieces.back().hi == ts[k])
          pieces.back().hi = ts[k + 1];
        else
          pieces.push_back({ts[k], ts[k + 1]});
      }
    }
    // isolated lit parameters become point reflectors
    for (size_t k = 0; k < ts.size(); ++k) {
      if (!t_lit[k]) continue;
      bool covered = false;
      for (const auto& p : pieces)
        if (p.lo <= ts[k] && ts[k] <= p.hi) { covered = true; break; }
      if (!covered) pieces.push_back({ts[k], ts[k]});
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const LitSet::Piece& a, const LitSet::Piece& b) { return a.lo < b.lo; });

    // vertices absorb: drop point reflectors at the edge ends
    std::vector<LitSet::Piece> trimmed;
    for (const auto& p : pieces) {
      if (p.lo == p.hi && (p.lo == 0 || p.hi == 1)) continue;
      trimmed.push_back(p);
    }
    lit.per_edge[i] = std::move(trimmed);
  }
  return lit;
}

namespace {

struct Reflector {
  Point a, b;
  bool open_a = false, open_b = false;
  bool is_point() const { return a == b; }
};

std::vector<Reflector> reflectors_of(const SimplePolygon& poly, const LitSet& lit) {
  std::vector<Reflector> out;
  for (int i = 0; i < poly.n(); ++i) {
    Segment e = poly.edge(i);
    auto at = [&](const Rat& t) {
      return Point(e.p.x + t * (e.q.x - e.p.x), e.p.y + t * (e.q.y - e.p.y));
    };
    for (const auto& p : lit.per_edge[i]) {
      Reflector r;
      r.a = at(p.lo);
      r.b = at(p.hi);
      r.open_a = (p.lo == 0);
      r.open_b = (p.hi == 1);
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace

DiffuseStages compute_Vk(const SimplePolygon& poly, const Point& s, int k, int cap) {
  if (k < 0) throw std::invalid_argument("negative reflection count");
  if (k > cap) throw std::invalid_argument("reflection count exceeds configured cap");
  if (classify_point(poly, s).where != Where::INTERIOR)
    throw SourceOutside("diffuse source must be interior");

  DiffuseStages out;
  out.stages.push_back(visibility_from_point(poly, s).to_region());

  std::vector<Segment> bitans = bitangent_segments(poly);
  std::vector<int> refl = reflex_vertices(poly);

  for (int stage = 1; stage <= k; ++stage) {
    const Region& prev = out.stages.back();
    LitSet lit = lit_segments(poly, prev);
    std::vector<Reflector> refls = reflectors_of(poly, lit);
    if (refls.empty()) {
      out.stages.push_back(prev);
      continue;
    }

    std::vector<Segment> segs;
    for (int i = 0; i < poly.n(); ++i) segs.push_back(poly.edge(i));
    segs.insert(segs.end(), bitans.begin(), bitans.end());
    std::vector<Segment> prev_segs = region_segments(prev);
    segs.insert(segs.end(), prev_segs.begin(), prev_segs.end());

    for (const Reflector& r : refls) {
      if (r.is_point()) {
        for (int i = 0; i < poly.n(); ++i) {
          if (poly.vertex(i) == r.a) continue;
          std::vector<Segment> c = clip_line_to_polygon(poly, r.a, poly.vertex(i));
          segs.insert(segs.end(), c.begin(), c.end());
        }
      } else {
        for (const Point* e : {&r.a, &r.b}) {
          for (int v : refl) {
            if (poly.vertex(v) == *e) continue;
            std::vector<Segment> c = clip_line_to_polygon(poly, *e, poly.vertex(v));
            segs.insert(segs.end(), c.begin(), c.end());
          }
        }
        std::vector<Segment> c = clip_line_to_polygon(poly, r.a, r.b);
        segs.insert(segs.end(), c.begin(), c.end());
      }
    }

    auto inside = [&](const Point& p) {
      if (region_member(prev, p)) return true;
      for (const Reflector& r : refls) {
        if (r.is_point()) {
          if (sees(poly, r.a, p)) return true;
        } else if (weak_sees(poly, r.a, r.b, p, r.open_a, r.open_b)) {
          return true;
        }
      }
      return false;
    };
    out.stages.push_back(build_region(segs, inside));
  }
  return out;
}

bool trace_valid(const SimplePolygon& poly, const ReflectionTrace& t) {
  if (t.points.size() < 2) return false;
  for (size_t i = 1; i + 1 < t.points.size(); ++i) {
    auto bp = boundary_point_of(poly, t.points[i]);
    if (!bp || !bp->edge_interior()) return false;
  }
  for (size_t i = 0; i + 1 < t.points.size(); ++i)
    if (!sees(poly, t.points[i], t.points[i + 1])) return false;
  return true;
}

namespace {

// candidate reflector points of a piece that see every target, generic
// (sub-interval midpoint) params first
std::vector<Point> piece_witnesses(const SimplePolygon& poly, const Reflector& r,
                                   const std::vector<Point>& targets) {
  std::vector<Point> out;
  auto sees_all = [&](const Point& p) {
    for (const Point& t : targets)
      if (!sees(poly, p, t)) return false;
    return true;
  };
  if (r.is_point()) {
    if (!r.open_a && sees_all(r.a)) out.push_back(r.a);
    return out;
  }
  Point d = r.b - r.a;
  std::vector<Rat> ts = {Rat(0), Rat(1)};
  for (const Point& y : targets) {
    for (int i = 0; i < poly.n(); ++i) {
      const Point& v = poly.vertex(i);
      Rat c0 = cross(y - r.a, v - r.a);
      Rat den = cross(y - r.a, d) + cross(d, v - r.a);
      if (den == 0) continue;
      Rat t = c0 / den;
      if (t > 0 && t < 1) ts.push_back(t);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  auto at = [&](const Rat& t) { return Point(r.a.x + t * d.x, r.a.y + t * d.y); };
  for (size_t k = 0; k + 1 < ts.size(); ++k) {
    Point p = at(Rat((ts[k] + ts[k + 1]) / 2));
    if (sees_all(p)) out.push_back(p);
  }
  for (const Rat& t : ts) {
    if ((r.open_a && t == 0) || (r.open_b && t == 1)) continue;
    Point p = at(t);
    if (sees_all(p)) out.push_back(p);
  }
  return out;
}

// depth-first backward walk through the stages, with backtracking over
// reflector witness choices
bool walk_back(const SimplePolygon& poly, const Point& s,
               const std::vector<std::vector<Reflector>>& stage_reflectors, int level,
               const Point& cur, std::vector<Point>& acc) {
  if (level == 0) {
    if (!sees(poly, s, cur)) return false;
    acc.push_back(s);
    return true;
  }
  for (const Reflector& r : stage_reflectors[level - 1]) {
    std::vector<Point> targets = {cur};
    if (level == 1) targets.push_back(s);
    for (const Point& w : piece_witnesses(poly, r, targets)) {
      acc.push_back(w);
      if (walk_back(poly, s, stage_reflectors, level - 1, w, acc)) return true;
      acc.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<ReflectionTrace> k_visible_witness(const SimplePolygon& poly, const Point& s,
                                                 const Point& y, int k, int cap) {
  if (classify_point(poly, s).where != Where::INTERIOR)
    throw SourceOutside("diffuse source must be interior");
  if (!in_closed(poly, y)) return std::nullopt;

  DiffuseStages st = compute_Vk(poly, s, k, cap);
  int level = -1;
  for (int i = 0; i < static_cast<int>(st.stages.size()); ++i)
    if (region_member(st.stages[i], y)) { level = i; break; }
  if (level < 0) return std::nullopt;

  std::vector<std::vector<Reflector>> stage_reflectors(k);
  for (int i = 0; i < k; ++i)
    stage_reflectors[i] = reflectors_of(poly, lit_segments(poly, st.stages[i]));

  // try the smallest achievable level first, deepening if a strict sight
  // chain does not materialize at the minimum
  for (int lv = level; lv <= k; ++lv) {
    std::vector<Point> acc = {y};
    if (walk_back(poly, s, stage_reflectors, lv, y, acc)) {
      std::reverse(acc.begin(), acc.end());
      ReflectionTrace t;
      t.points = std::move(acc);
      if (trace_valid(poly, t)) return t;
    }
  }
  return std::nullopt;
}

}  // namespace dvis
