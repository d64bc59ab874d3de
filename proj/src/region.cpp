#include "dvis/region.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "dvis/arrangement.hpp"

namespace dvis {

Rat RegionFace::area2() const {
  Rat a = outer.signed_area2();
  for (const SimplePolygon& h : holes) a += h.signed_area2();  // holes are CW, negative
  return a;
}

Rat Region::area2() const {
  Rat a(0);
  for (const RegionFace& f : faces) a += f.area2();
  return a;
}

bool region_member(const Region& r, const Point& p) {
  for (const RegionFace& f : r.faces) {
    if (!in_closed(f.outer, p)) continue;
    bool in_hole_interior = false;
    for (const SimplePolygon& h : f.holes)
      if (in_open(h, p)) { in_hole_interior = true; break; }
    if (!in_hole_interior) return true;
  }
  return false;
}

std::vector<Segment> region_segments(const Region& r) {
  std::vector<Segment> segs;
  for (const RegionFace& f : r.faces) {
    for (int i = 0; i < f.outer.n(); ++i) segs.push_back(f.outer.edge(i));
    for (const SimplePolygon& h : f.holes)
      for (int i = 0; i < h.n(); ++i) segs.push_back(h.edge(i));
  }
  return segs;
}

namespace {

// Splits a walked (possibly weakly simple) closed vertex loop into simple
// loops at repeated vertices.
void split_simple_loops(const std::vector<int>& loop, std::vector<std::vector<int>>& out) {
  std::vector<int> stack;
  std::map<int, int> pos;  // vertex -> index in stack
  for (int v : loop) {
    auto it = pos.find(v);
    if (it != pos.end()) {
      std::vector<int> sub(stack.begin() + it->second, stack.end());
      for (int u : sub)
        if (u != v) pos.erase(u);
      stack.resize(it->second);
      if (sub.size() >= 3) out.push_back(std::move(sub));
      // leave v in pos: it is re-pushed below
      stack.push_back(v);
      pos[v] = static_cast<int>(stack.size()) - 1;
    } else {
      stack.push_back(v);
      pos[v] = static_cast<int>(stack.size()) - 1;
    }
  }
  if (stack.size() >= 3) out.push_back(std::move(stack));
}

SimplePolygon loop_to_polygon(const std::vector<int>& loop, const std::vector<Point>& verts) {
  std::vector<Point> pts;
  pts.reserve(loop.size());
  for (int v : loop) pts.push_back(verts[v]);
  // merge collinear chains
  std::vector<Point> merged;
  int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    const Point& prev = pts[(i - 1 + n) % n];
    const Point& cur = pts[i];
    const Point& nxt = pts[(i + 1) % n];
    if (orient(prev, cur, nxt) != Orient::COLLINEAR) merged.push_back(cur);
  }
  if (merged.size() < 3) return SimplePolygon(pts);
  return SimplePolygon(merged);
}

}  // namespace

Region build_region(const std::vector<Segment>& segments,
                    const std::function<bool(const Point&)>& inside) {
  Arrangement arr(segments);

  std::vector<char> in(arr.faces().size(), 0);
  for (size_t f = 0; f < arr.faces().size(); ++f)
    if (arr.faces()[f].bounded()) in[f] = inside(arr.faces()[f].sample) ? 1 : 0;

  // Boundary half-edges keep the inside on their left.
  int H = arr.half_edge_count();
  std::vector<char> is_boundary(H, 0);
  for (int h = 0; h < H; ++h)
    if (in[arr.face_of(h)] && !in[arr.face_of(Arrangement::twin(h))]) is_boundary[h] = 1;

  // Outgoing boundary half-edges per vertex, sorted counterclockwise.
  auto half = [](const Point& d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; };
  auto dless = [&](const Point& a, const Point& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
  };
  std::vector<std::vector<int>> out(arr.vertex_count());
  for (int h = 0; h < H; ++h)
    if (is_boundary[h]) out[arr.from(h)].push_back(h);
  for (auto& lst : out)
    std::sort(lst.begin(), lst.end(),
              [&](int h1, int h2) { return dless(arr.he_dir(h1), arr.he_dir(h2)); });
  auto next_boundary = [&](int h) {
    // continue with the first outgoing boundary half-edge clockwise from the
    // reverse direction (lst is sorted CCW, so take the predecessor of back)
    int v = arr.to(h);
    const auto& lst = out[v];
    Point back = arr.he_dir(Arrangement::twin(h));
    int best = -1;
    for (int k = 0; k < static_cast<int>(lst.size()); ++k)
      if (dless(arr.he_dir(lst[k]), back)) best = k;
    if (best < 0) best = static_cast<int>(lst.size()) - 1;
    return lst[best];
  };

  std::vector<char> used(H, 0);
  std::vector<std::vector<int>> simple_loops;
  for (int h0 = 0; h0 < H; ++h0) {
    if (!is_boundary[h0] || used[h0]) continue;
    std::vector<int> vloop;
    int cur = h0;
    do {
      used[cur] = 1;
      vloop.push_back(arr.from(cur));
      cur = next_boundary(cur);
    } while (cur != h0);
    split_simple_loops(vloop, simple_loops);
  }

  // Orient: CCW loops are outer rings, CW loops are holes.
  std::vector<Point> arr_verts;
  arr_verts.reserve(arr.vertex_count());
  for (int v = 0; v < arr.vertex_count(); ++v) arr_verts.push_back(arr.vertex(v));

  std::vector<SimplePolygon> outers, holes;
  for (const auto& loop : simple_loops) {
    SimplePolygon poly = loop_to_polygon(loop, arr_verts);
    if (poly.n() < 3) continue;
    Rat a2 = poly.signed_area2();
    if (a2 > 0)
      outers.push_back(std::move(poly));
    else if (a2 < 0)
      holes.push_back(std::move(poly));
  }

  Region region;
  for (SimplePolygon& o : outers) region.faces.push_back(RegionFace{std::move(o), {}});
  // assign each hole to the smallest containing outer ring
  for (SimplePolygon& h : holes) {
    Point a = h.vertices[0], b = h.vertices[1];
    Point mid((a.x + b.x) / 2, (a.y + b.y) / 2);
    int best = -1;
    Rat best_area;
    for (size_t f = 0; f < region.faces.size(); ++f) {
      const SimplePolygon& o = region.faces[f].outer;
      if (!in_open(o, mid)) continue;
      Rat a2 = o.signed_area2();
      if (best < 0 || a2 < best_area) {
        best = static_cast<int>(f);
        best_area = a2;
      }
    }
    if (best < 0) throw std::logic_error("hole ring without containing outer ring");
    region.faces[best].holes.push_back(std::move(h));
  }
  return region;
}

Region region_of_polygon(const SimplePolygon& poly) {
  Region r;
  r.faces.push_back(RegionFace{poly, {}});
  return r;
}

Region region_union(const std::vector<Region>& parts) {
  std::vector<Segment> segs;
  for (const Region& r : parts) {
    std::vector<Segment> s = region_segments(r);
    segs.insert(segs.end(), s.begin(), s.end());
  }
  if (segs.empty()) return Region{};
  return build_region(segs, [&](const Point& p) {
    for (const Region& r : parts)
      if (region_member(r, p)) return true;
    return false;
  });
}

Region region_intersection(const Region& a, const Region& b) {
  std::vector<Segment> segs = region_segments(a);
  std::vector<Segment> sb = region_segments(b);
  segs.insert(segs.end(), sb.begin(), sb.end());
  if (segs.empty()) return Region{};
  return build_region(
      segs, [&](const Point& p) { return region_member(a, p) && region_member(b, p); });
}

Region complement_in(const SimplePolygon& poly, const Region& r) {
  std::vector<Segment> segs;
  for (int i = 0; i < poly.n(); ++i) segs.push_back(poly.edge(i));
  std::vector<Segment> sr = region_segments(r);
  segs.insert(segs.end(), sr.begin(), sr.end());
  return build_region(
      segs, [&](const Point& p) { return in_closed(poly, p) && !region_member(r, p); });
}

std::vector<RegionFace> holes_of(const SimplePolygon& poly, const Region& r) {
  Region comp = complement_in(poly, r);

  // Group faces into components: faces sharing a boundary vertex are one
  // component of the closed complement.
  int nf = static_cast<int>(comp.faces.size());
  std::vector<int> parent(nf);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<Point, int, PointLess> seen;
  auto note = [&](const Point& p, int f) {
    auto it = seen.find(p);
    if (it == seen.end())
      seen.emplace(p, f);
    else
      parent[find(f)] = find(it->second);
  };
  for (int f = 0; f < nf; ++f) {
    for (const Point& p : comp.faces[f].outer.vertices) note(p, f);
    for (const SimplePolygon& h : comp.faces[f].holes)
      for (const Point& p : h.vertices) note(p, f);
  }

  auto touches_bd = [&](const RegionFace& f) {
    auto on_bd = [&](const Point& p) {
      for (int i = 0; i < poly.n(); ++i) {
        Segment e = poly.edge(i);
        if (on_segment(e.p, e.q, p)) return true;
      }
      return false;
    };
    for (const Point& p : f.outer.vertices)
      if (on_bd(p)) return true;
    for (const SimplePolygon& h : f.holes)
      for (const Point& p : h.vertices)
        if (on_bd(p)) return true;
    return false;
  };

  std::map<int, bool> component_touches;
  for (int f = 0; f < nf; ++f) {
    int root = find(f);
    bool t = touches_bd(comp.faces[f]);
    auto it = component_touches.find(root);
    if (it == component_touches.end())
      component_touches[root] = t;
    else
      it->second = it->second || t;
  }

  std::vector<RegionFace> holes;
  for (int f = 0; f < nf; ++f)
    if (!component_touches[find(f)] && comp.faces[f].area2() > 0)
      holes.push_back(comp.faces[f]);
  return holes;
}

Rat region_xor_area2(const Region& a, const Region& b) {
  std::vector<Segment> segs = region_segments(a);
  std::vector<Segment> sb = region_segments(b);
  segs.insert(segs.end(), sb.begin(), sb.end());
  if (segs.empty()) return Rat(0);
  Region x = build_region(
      segs, [&](const Point& p) { return region_member(a, p) != region_member(b, p); });
  return x.area2();
}

bool region_equal(const Region& a, const Region& b) { return region_xor_area2(a, b) == 0; }

bool region_subset(const Region& a, const Region& b) {
  std::vector<Segment> segs = region_segments(a);
  std::vector<Segment> sb = region_segments(b);
  segs.insert(segs.end(), sb.begin(), sb.end());
  if (segs.empty()) return true;
  Region x = build_region(
      segs, [&](const Point& p) { return region_member(a, p) && !region_member(b, p); });
  return x.area2() == 0;
}

}  // namespace dvis
