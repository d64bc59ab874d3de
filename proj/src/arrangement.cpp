#include "dvis/arrangement.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace dvis {

namespace {

struct DBox {
  double xlo, xhi, ylo, yhi;
  bool overlaps(const DBox& o) const {
    return xlo <= o.xhi && o.xlo <= xhi && ylo <= o.yhi && o.ylo <= yhi;
  }
};

// Conservative double box (outward rounded); used only to prune candidate
// pairs, exact tests decide everything.
DBox dbox(const Segment& s) {
  double x1 = s.p.x.get_d(), x2 = s.q.x.get_d();
  double y1 = s.p.y.get_d(), y2 = s.q.y.get_d();
  DBox b;
  b.xlo = std::nextafter(std::min(x1, x2), -1e308);
  b.xhi = std::nextafter(std::max(x1, x2), 1e308);
  b.ylo = std::nextafter(std::min(y1, y2), -1e308);
  b.yhi = std::nextafter(std::max(y1, y2), 1e308);
  return b;
}

// Angular order of directions around a vertex, counterclockwise from +x axis.
bool dir_less(const Point& a, const Point& b) {
  auto half = [](const Point& d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

}  // namespace

Arrangement::Arrangement(const std::vector<Segment>& segments) { build(segments); }

void Arrangement::build(const std::vector<Segment>& input) {
  std::vector<Segment> segs;
  segs.reserve(input.size());
  for (const Segment& s : input)
    if (!s.degenerate()) segs.push_back(s);

  const int m = static_cast<int>(segs.size());
  std::vector<std::vector<Rat>> cuts(m);
  for (int i = 0; i < m; ++i) {
    cuts[i].push_back(Rat(0));
    cuts[i].push_back(Rat(1));
  }

  std::vector<DBox> boxes(m);
  for (int i = 0; i < m; ++i) boxes[i] = dbox(segs[i]);

  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (!boxes[i].overlaps(boxes[j])) continue;
      SegIntersection x = intersect_segments(segs[i], segs[j]);
      if (x.kind == SegIntersection::At) {
        cuts[i].push_back(segment_param(segs[i].p, segs[i].q, x.point));
        cuts[j].push_back(segment_param(segs[j].p, segs[j].q, x.point));
      } else if (x.kind == SegIntersection::Overlap) {
        for (const Point* p : {&x.overlap.p, &x.overlap.q}) {
          cuts[i].push_back(segment_param(segs[i].p, segs[i].q, *p));
          cuts[j].push_back(segment_param(segs[j].p, segs[j].q, *p));
        }
      }
    }
  }

  std::map<Point, int, PointLess> vid;
  auto vertex_id = [&](const Point& p) {
    auto it = vid.find(p);
    if (it != vid.end()) return it->second;
    int id = static_cast<int>(verts_.size());
    verts_.push_back(p);
    vid.emplace(p, id);
    return id;
  };

  std::map<std::pair<int, int>, int> atom_ids;
  std::vector<std::pair<int, int>> atoms;
  for (int i = 0; i < m; ++i) {
    std::sort(cuts[i].begin(), cuts[i].end());
    cuts[i].erase(std::unique(cuts[i].begin(), cuts[i].end()), cuts[i].end());
    const Point &a = segs[i].p, &b = segs[i].q;
    for (size_t k = 0; k + 1 < cuts[i].size(); ++k) {
      const Rat &t0 = cuts[i][k], &t1 = cuts[i][k + 1];
      Point p0(a.x + t0 * (b.x - a.x), a.y + t0 * (b.y - a.y));
      Point p1(a.x + t1 * (b.x - a.x), a.y + t1 * (b.y - a.y));
      int u = vertex_id(p0), v = vertex_id(p1);
      if (u == v) continue;
      std::pair<int, int> key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
      if (atom_ids.emplace(key, static_cast<int>(atoms.size())).second) atoms.push_back(key);
    }
  }

  const int na = static_cast<int>(atoms.size());
  he_from_.resize(2 * na);
  he_to_.resize(2 * na);
  he_next_.assign(2 * na, -1);
  he_face_.assign(2 * na, -1);
  for (int e = 0; e < na; ++e) {
    he_from_[2 * e] = atoms[e].first;
    he_to_[2 * e] = atoms[e].second;
    he_from_[2 * e + 1] = atoms[e].second;
    he_to_[2 * e + 1] = atoms[e].first;
  }

  // Outgoing half-edges per vertex, sorted counterclockwise.
  std::vector<std::vector<int>> out(verts_.size());
  for (int h = 0; h < 2 * na; ++h) out[he_from_[h]].push_back(h);
  for (auto& lst : out)
    std::sort(lst.begin(), lst.end(),
              [&](int h1, int h2) { return dir_less(he_dir(h1), he_dir(h2)); });
  std::vector<int> pos(2 * na);
  for (const auto& lst : out)
    for (size_t k = 0; k < lst.size(); ++k) pos[lst[k]] = static_cast<int>(k);

  // Face-on-the-left traversal: continue with the clockwise neighbor of the
  // twin around the head vertex.
  for (int h = 0; h < 2 * na; ++h) {
    int v = he_to_[h];
    const auto& lst = out[v];
    int k = pos[twin(h)];
    he_next_[h] = lst[(k - 1 + static_cast<int>(lst.size())) % lst.size()];
  }

  // Cycles.
  std::vector<int> cyc_of(2 * na, -1);
  for (int h = 0; h < 2 * na; ++h) {
    if (cyc_of[h] >= 0) continue;
    Cycle c;
    int cur = h;
    do {
      cyc_of[cur] = static_cast<int>(cycles_.size());
      c.hes.push_back(cur);
      const Point &p = verts_[he_from_[cur]], &q = verts_[he_to_[cur]];
      c.area2 += p.x * q.y - q.x * p.y;
      cur = he_next_[cur];
    } while (cur != h);
    cycles_.push_back(std::move(c));
  }

  // Faces: one per counterclockwise cycle, plus the unbounded face.
  unbounded_face_ = 0;
  faces_.push_back(Face{});
  for (size_t c = 0; c < cycles_.size(); ++c) {
    if (cycles_[c].area2 > 0) {
      Face f;
      f.outer_cycle = static_cast<int>(c);
      cycles_[c].face = static_cast<int>(faces_.size());
      faces_.push_back(std::move(f));
    }
  }

  // Assign non-CCW cycles (holes of faces, or outer boundaries seen from the
  // unbounded face) to the face they live in: probe a point strictly on the
  // cycle's face side (off every edge), then locate it among the CCW cycles.
  std::vector<int> ccw_ids;
  for (size_t c = 0; c < cycles_.size(); ++c)
    if (cycles_[c].area2 > 0) ccw_ids.push_back(static_cast<int>(c));

  auto point_in_cycle = [&](const Point& p, const Cycle& cy) {
    int crossings = 0;
    for (int h : cy.hes) {
      const Point &a = verts_[he_from_[h]], &b = verts_[he_to_[h]];
      bool above1 = a.y > p.y, above2 = b.y > p.y;
      if (above1 == above2) continue;
      Rat xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (xint > p.x) ++crossings;
    }
    return crossings % 2 == 1;
  };

  for (size_t c = 0; c < cycles_.size(); ++c) {
    if (cycles_[c].area2 > 0) continue;
    std::optional<Point> probe = cycle_probe(cycles_[c]);
    int face = unbounded_face_;
    if (probe) {
      int best = -1;
      Rat best_area;
      for (int cc : ccw_ids) {
        if (!point_in_cycle(*probe, cycles_[cc])) continue;
        if (best < 0 || cycles_[cc].area2 < best_area) {
          best = cc;
          best_area = cycles_[cc].area2;
        }
      }
      if (best >= 0) face = cycles_[best].face;
    }
    cycles_[c].face = face;
    faces_[face].inner_cycles.push_back(static_cast<int>(c));
  }

  for (size_t c = 0; c < cycles_.size(); ++c)
    for (int h : cycles_[c].hes) he_face_[h] = cycles_[c].face;

  for (Face& f : faces_)
    if (f.bounded()) f.sample = face_sample(cycles_[f.outer_cycle]);
}

std::optional<Rat> Arrangement::first_hit_above(const Point& m) const {
  bool found = false;
  Rat best_y;
  int na = half_edge_count() / 2;
  for (int e = 0; e < na; ++e) {
    const Point &p = verts_[he_from_[2 * e]], &q = verts_[he_to_[2 * e]];
    if (p.x == q.x) {
      if (p.x != m.x) continue;
      Rat lo = min(p.y, q.y);
      if (lo > m.y && (!found || lo < best_y)) { found = true; best_y = lo; }
      continue;
    }
    Rat lox = min(p.x, q.x), hix = max(p.x, q.x);
    if (m.x < lox || m.x > hix) continue;
    Rat y = p.y + (m.x - p.x) * (q.y - p.y) / (q.x - p.x);
    if (y > m.y && (!found || y < best_y)) { found = true; best_y = y; }
  }
  if (!found) return std::nullopt;
  return best_y;
}

std::optional<Rat> Arrangement::first_hit_west(const Point& m) const {
  bool found = false;
  Rat best_x;
  int na = half_edge_count() / 2;
  for (int e = 0; e < na; ++e) {
    const Point &p = verts_[he_from_[2 * e]], &q = verts_[he_to_[2 * e]];
    if (p.y == q.y) {
      if (p.y != m.y) continue;
      Rat hi = max(p.x, q.x);
      if (hi < m.x && (!found || hi > best_x)) { found = true; best_x = hi; }
      continue;
    }
    Rat loy = min(p.y, q.y), hiy = max(p.y, q.y);
    if (m.y < loy || m.y > hiy) continue;
    Rat x = p.x + (m.y - p.y) * (q.x - p.x) / (q.y - p.y);
    if (x < m.x && (!found || x > best_x)) { found = true; best_x = x; }
  }
  if (!found) return std::nullopt;
  return best_x;
}

// A point strictly inside the face lying on the left of this cycle's
// half-edges: probe off a bottom edge upward, or off a vertical edge westward.
std::optional<Point> Arrangement::cycle_probe(const Cycle& cycle) const {
  for (int h : cycle.hes) {
    Point d = he_dir(h);
    if (d.x > 0) {
      const Point &a = verts_[he_from_[h]], &b = verts_[he_to_[h]];
      Point m((a.x + b.x) / 2, (a.y + b.y) / 2);
      std::optional<Rat> hit = first_hit_above(m);
      if (!hit) return std::nullopt;  // face above is unbounded
      return Point(m.x, (m.y + *hit) / 2);
    }
  }
  for (int h : cycle.hes) {
    Point d = he_dir(h);
    if (d.x == 0 && d.y > 0) {
      const Point &a = verts_[he_from_[h]], &b = verts_[he_to_[h]];
      Point m((a.x + b.x) / 2, (a.y + b.y) / 2);
      std::optional<Rat> hit = first_hit_west(m);
      if (!hit) return std::nullopt;
      return Point((m.x + *hit) / 2, m.y);
    }
  }
  return std::nullopt;  // all edges point down/left: cannot happen for walks
}

Point Arrangement::face_sample(const Cycle& outer) const {
  // Midpoint of a bottom edge (face above), then shoot a vertical ray up to
  // the first arrangement point; halve the gap.
  for (int h : outer.hes) {
    Point d = he_dir(h);
    if (d.x > 0) {
      const Point &a = verts_[he_from_[h]], &b = verts_[he_to_[h]];
      Point m((a.x + b.x) / 2, (a.y + b.y) / 2);
      std::optional<Rat> hit = first_hit_above(m);
      if (!hit) throw std::logic_error("bounded face without ceiling");
      return Point(m.x, (m.y + *hit) / 2);
    }
  }
  throw std::logic_error("ccw cycle without a bottom edge");
}

}  // namespace dvis
