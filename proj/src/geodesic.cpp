#include "dvis/geodesic.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "dvis/errors.hpp"

namespace dvis {

std::vector<std::array<int, 3>> triangulate(const SimplePolygon& poly) {
  std::vector<int> idx(poly.n());
  for (int i = 0; i < poly.n(); ++i) idx[i] = i;
  std::vector<std::array<int, 3>> tris;

  auto vtx = [&](int k) -> const Point& { return poly.vertices[idx[k]]; };

  while (idx.size() > 3) {
    int m = static_cast<int>(idx.size());
    // remove straight vertices first; they cannot anchor anything
    bool removed = false;
    for (int k = 0; k < m; ++k) {
      const Point &p = vtx((k - 1 + m) % m), &c = vtx(k), &q = vtx((k + 1) % m);
      if (orient(p, c, q) == Orient::COLLINEAR) {
        idx.erase(idx.begin() + k);
        removed = true;
        break;
      }
    }
    if (removed) continue;

    bool clipped = false;
    for (int k = 0; k < m && !clipped; ++k) {
      const Point &p = vtx((k - 1 + m) % m), &c = vtx(k), &q = vtx((k + 1) % m);
      if (orient(p, c, q) != Orient::CCW) continue;
      bool blocked = false;
      for (int j = 0; j < m && !blocked; ++j) {
        if (j == k || j == (k - 1 + m) % m || j == (k + 1) % m) continue;
        const Point& z = vtx(j);
        // z inside or on the closed candidate ear triangle
        if (orient_sign(p, c, z) >= 0 && orient_sign(c, q, z) >= 0 &&
            orient_sign(q, p, z) >= 0)
          blocked = true;
      }
      if (blocked) continue;
      tris.push_back({idx[(k - 1 + m) % m], idx[k], idx[(k + 1) % m]});
      idx.erase(idx.begin() + k);
      clipped = true;
    }
    if (!clipped) throw std::logic_error("ear clipping stuck (invalid polygon?)");
  }
  if (idx.size() == 3 &&
      orient(poly.vertices[idx[0]], poly.vertices[idx[1]], poly.vertices[idx[2]]) ==
          Orient::CCW)
    tris.push_back({idx[0], idx[1], idx[2]});
  return tris;
}

namespace {

bool in_closed_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  return orient_sign(a, b, p) >= 0 && orient_sign(b, c, p) >= 0 && orient_sign(c, a, p) >= 0;
}

std::vector<Point> string_pull(const Point& a, const Point& b,
                               const std::vector<std::pair<Point, Point>>& portals_in) {
  std::vector<std::pair<Point, Point>> portals;
  portals.emplace_back(a, a);
  portals.insert(portals.end(), portals_in.begin(), portals_in.end());
  portals.emplace_back(b, b);

  std::vector<Point> path = {a};
  Point apex = a, pl = a, pr = a;
  size_t li = 0, ri = 0;

  for (size_t i = 1; i < portals.size(); ++i) {
    const Point& l = portals[i].first;
    const Point& r = portals[i].second;

    // tighten the right side of the funnel (right boundary rotates ccw only)
    if (orient_sign(apex, pr, r) >= 0) {
      if (apex == pr || orient_sign(apex, pl, r) < 0) {
        pr = r;
        ri = i;
      } else {
        // right crossed over left: left point becomes the new apex
        if (path.empty() || !(path.back() == pl)) path.push_back(pl);
        apex = pl;
        pr = apex;
        pl = apex;
        ri = li;
        i = li;  // restart scan just after the new apex portal
        continue;
      }
    }
    // tighten the left side (mirror)
    if (orient_sign(apex, pl, l) <= 0) {
      if (apex == pl || orient_sign(apex, pr, l) > 0) {
        pl = l;
        li = i;
      } else {
        if (path.empty() || !(path.back() == pr)) path.push_back(pr);
        apex = pr;
        pl = apex;
        pr = apex;
        li = ri;
        i = ri;
        continue;
      }
    }
  }
  if (path.empty() || !(path.back() == b)) path.push_back(b);
  // drop exact duplicates
  std::vector<Point> clean;
  for (const Point& p : path)
    if (clean.empty() || !(clean.back() == p)) clean.push_back(p);
  return clean;
}

}  // namespace

std::vector<Point> geodesic(const SimplePolygon& poly, const Point& a, const Point& b) {
  if (!in_closed(poly, a) || !in_closed(poly, b))
    throw PointOutside("geodesic endpoint outside polygon");
  if (a == b) return {a};

  std::vector<std::array<int, 3>> tris = triangulate(poly);

  auto locate = [&](const Point& p) {
    for (size_t t = 0; t < tris.size(); ++t)
      if (in_closed_triangle(poly.vertices[tris[t][0]], poly.vertices[tris[t][1]],
                             poly.vertices[tris[t][2]], p))
        return static_cast<int>(t);
    return -1;
  };
  int ta = locate(a), tb = locate(b);
  if (ta < 0 || tb < 0) throw PointOutside("geodesic endpoint not in any triangle");
  if (ta == tb) return {a, b};

  // dual tree over shared diagonals
  std::map<std::pair<int, int>, std::vector<int>> by_edge;
  for (size_t t = 0; t < tris.size(); ++t) {
    for (int k = 0; k < 3; ++k) {
      int u = tris[t][k], v = tris[t][(k + 1) % 3];
      by_edge[{std::min(u, v), std::max(u, v)}].push_back(static_cast<int>(t));
    }
  }
  std::vector<std::vector<std::pair<int, std::pair<int, int>>>> adj(tris.size());
  for (const auto& [e, ts] : by_edge) {
    if (ts.size() == 2) {
      adj[ts[0]].push_back({ts[1], e});
      adj[ts[1]].push_back({ts[0], e});
    }
  }
  std::vector<int> parent(tris.size(), -1);
  std::vector<std::pair<int, int>> parent_edge(tris.size(), {-1, -1});
  std::queue<int> bfs;
  bfs.push(ta);
  parent[ta] = ta;
  while (!bfs.empty()) {
    int t = bfs.front();
    bfs.pop();
    if (t == tb) break;
    for (const auto& [nt, e] : adj[t]) {
      if (parent[nt] >= 0) continue;
      parent[nt] = t;
      parent_edge[nt] = e;
      bfs.push(nt);
    }
  }
  if (parent[tb] < 0) throw std::logic_error("triangulation dual not connected");

  std::vector<int> corridor;  // tb back to ta
  std::vector<std::pair<int, int>> diagonals;
  for (int t = tb; t != ta; t = parent[t]) {
    corridor.push_back(t);
    diagonals.push_back(parent_edge[t]);
  }
  corridor.push_back(ta);
  std::reverse(corridor.begin(), corridor.end());
  std::reverse(diagonals.begin(), diagonals.end());

  // orient each portal (left, right) as seen walking out of the previous triangle
  std::vector<std::pair<Point, Point>> portals;
  for (size_t k = 0; k < diagonals.size(); ++k) {
    int t = corridor[k];
    const Point& u = poly.vertices[diagonals[k].first];
    const Point& v = poly.vertices[diagonals[k].second];
    const Point& A = poly.vertices[tris[t][0]];
    const Point& B = poly.vertices[tris[t][1]];
    const Point& C = poly.vertices[tris[t][2]];
    Point centroid((A.x + B.x + C.x) / 3, (A.y + B.y + C.y) / 3);
    if (orient_sign(centroid, v, u) > 0)
      portals.emplace_back(u, v);
    else
      portals.emplace_back(v, u);
  }
  return string_pull(a, b, portals);
}

bool path_contains(const std::vector<Point>& path, const Point& p) {
  if (path.size() == 1) return path[0] == p;
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (on_segment(path[i], path[i + 1], p)) return true;
  return false;
}

}  // namespace dvis
