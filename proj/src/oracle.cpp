#include "dvis/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "dvis/errors.hpp"

namespace dvis {

Rat default_grid_pitch(const SimplePolygon& poly) {
  Rat xmin = poly.vertices[0].x, xmax = xmin, ymin = poly.vertices[0].y, ymax = ymin;
  for (const Point& p : poly.vertices) {
    xmin = min(xmin, p.x);
    xmax = max(xmax, p.x);
    ymin = min(ymin, p.y);
    ymax = max(ymax, p.y);
  }
  return Rat((xmax - xmin + ymax - ymin) / 90);
}

SampleSet make_samples(const SimplePolygon& poly, int m, const Rat& delta) {
  SampleSet set;
  set.m = m;
  set.delta = delta;
  for (int e = 0; e < poly.n(); ++e) {
    Segment ed = poly.edge(e);
    for (int j = 1; j <= m; ++j) {
      Rat t(j, m + 1);
      t.canonicalize();
      Point p(ed.p.x + t * (ed.q.x - ed.p.x), ed.p.y + t * (ed.q.y - ed.p.y));
      set.edge_samples.push_back({e, t, p});
    }
  }
  Rat xmin = poly.vertices[0].x, xmax = xmin, ymin = poly.vertices[0].y, ymax = ymin;
  for (const Point& p : poly.vertices) {
    xmin = min(xmin, p.x);
    xmax = max(xmax, p.x);
    ymin = min(ymin, p.y);
    ymax = max(ymax, p.y);
  }
  for (Rat x = xmin + delta; x < xmax; x += delta)
    for (Rat y = ymin + delta; y < ymax; y += delta) {
      Point p(x, y);
      if (classify_point(poly, p).where == Where::INTERIOR) set.grid_samples.push_back(p);
    }
  return set;
}

namespace {

// parallel map over an index range (the sees() evaluations are independent)
template <class F>
void par_for(int n, F&& f) {
  unsigned hw = std::thread::hardware_concurrency();
  int workers = std::max(1u, std::min(hw, 4u));
  if (n < 64 || workers == 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

OracleResult oracle_reachable(const SimplePolygon& poly, const Point& s, int k, int m,
                              const Rat& delta) {
  if (classify_point(poly, s).where != Where::INTERIOR)
    throw SourceOutside("oracle source must be interior");

  OracleResult res;
  res.samples = make_samples(poly, m, delta);
  const auto& es = res.samples.edge_samples;
  const auto& gs = res.samples.grid_samples;
  res.edge_depth.assign(es.size(), -1);
  res.grid_depth.assign(gs.size(), -1);

  par_for(static_cast<int>(es.size()), [&](int i) {
    if (sees(poly, s, es[i].p)) res.edge_depth[i] = 0;
  });
  par_for(static_cast<int>(gs.size()), [&](int i) {
    if (sees(poly, s, gs[i])) res.grid_depth[i] = 0;
  });

  for (int d = 1; d <= k; ++d) {
    std::vector<int> frontier;
    for (size_t i = 0; i < es.size(); ++i)
      if (res.edge_depth[i] == d - 1) frontier.push_back(static_cast<int>(i));
    if (frontier.empty()) break;

    par_for(static_cast<int>(es.size()), [&](int i) {
      if (res.edge_depth[i] >= 0) return;
      for (int f : frontier)
        if (sees(poly, es[f].p, es[i].p)) {
          res.edge_depth[i] = d;
          return;
        }
    });
    par_for(static_cast<int>(gs.size()), [&](int i) {
      if (res.grid_depth[i] >= 0) return;
      for (int f : frontier)
        if (sees(poly, es[f].p, gs[i])) {
          res.grid_depth[i] = d;
          return;
        }
    });
  }
  return res;
}

OracleComparison compare_with_analytic(const SimplePolygon& poly, const OracleResult& oracle,
                                       const DiffuseStages& stages) {
  OracleComparison cmp;
  int k = static_cast<int>(stages.stages.size()) - 1;
  auto check = [&](const Point& p, int depth) {
    if (depth >= 0) {
      ++cmp.oracle_reached;
      int d = std::min(depth, k);
      if (!region_member(stages.stages[d], p)) {
        ++cmp.soundness_violations;
        if (cmp.violation_witnesses.size() < 100) cmp.violation_witnesses.push_back({p, depth});
      }
    } else if (region_member(stages.last(), p)) {
      ++cmp.analytic_only;
      if (cmp.analytic_only_witnesses.size() < 100)
        cmp.analytic_only_witnesses.push_back({p, -1});
    }
  };
  for (size_t i = 0; i < oracle.samples.edge_samples.size(); ++i)
    check(oracle.samples.edge_samples[i].p, oracle.edge_depth[i]);
  for (size_t i = 0; i < oracle.samples.grid_samples.size(); ++i)
    check(oracle.samples.grid_samples[i], oracle.grid_depth[i]);
  return cmp;
}

OracleComparison compare_with_analytic(const SimplePolygon& poly, const Point& s, int k, int m,
                                       const Rat& delta) {
  OracleResult oracle = oracle_reachable(poly, s, k, m, delta);
  DiffuseStages stages = compute_Vk(poly, s, k);
  return compare_with_analytic(poly, oracle, stages);
}

}  // namespace dvis
