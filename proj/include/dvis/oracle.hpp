#pragma once

#include "dvis/diffuse.hpp"

namespace dvis {

// Discretized scene: m equally spaced interior samples per edge (parameters
// j/(m+1)) plus an axis-aligned interior grid of pitch delta. Everything
// stays rational; no rounding occurs anywhere in the oracle.
struct SampleSet {
  struct EdgeSample {
    int edge;
    Rat t;
    Point p;
  };
  std::vector<EdgeSample> edge_samples;
  std::vector<Point> grid_samples;
  Rat delta;
  int m = 0;
};

// Rational stand-in for "bounding-box diagonal / 64".
Rat default_grid_pitch(const SimplePolygon& poly);

SampleSet make_samples(const SimplePolygon& poly, int m, const Rat& delta);

// Breadth-first reachability over the samples: depth 0 is direct sight from
// s; depth i+1 adds samples seen from any edge sample of depth <= i.
struct OracleResult {
  SampleSet samples;
  std::vector<int> edge_depth;  // -1: unreached
  std::vector<int> grid_depth;
};

OracleResult oracle_reachable(const SimplePolygon& poly, const Point& s, int k, int m,
                              const Rat& delta);

struct OracleComparison {
  struct Witness {
    Point p;
    int depth;
  };
  int oracle_reached = 0;
  int soundness_violations = 0;           // oracle-reached but outside analytic V_depth
  std::vector<Witness> violation_witnesses;  // first 100
  int analytic_only = 0;                  // inside analytic V_k but unreached (advisory)
  std::vector<Witness> analytic_only_witnesses;
};

OracleComparison compare_with_analytic(const SimplePolygon& poly, const Point& s, int k, int m,
                                       const Rat& delta);
OracleComparison compare_with_analytic(const SimplePolygon& poly, const OracleResult& oracle,
                                       const DiffuseStages& stages);

}  // namespace dvis
