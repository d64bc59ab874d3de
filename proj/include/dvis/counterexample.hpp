#pragma once

#include <map>
#include <string>

#include "dvis/diffuse.hpp"
#include "dvis/geodesic.hpp"

namespace dvis {

// The committed hole construction: a simple polygon with an interior source
// whose two-bounce visibility region has a triangular hole.
struct LabeledConstruction {
  SimplePolygon polygon;
  Point source;
  std::map<std::string, int> vertex_labels;          // a..j, v, w, x, y
  std::map<std::string, BoundaryPoint> aux_points;   // k, z, y', c', f'
  std::array<Point, 3> triangle;                     // t, q, r

  const Point& named(const std::string& label) const {
    return polygon.vertices[vertex_labels.at(label)];
  }
  Point aux(const std::string& label) const { return aux_points.at(label).point(polygon); }
};

// Fixed rational coordinates committed in the repository.
LabeledConstruction build_counterexample();

// Applies x' = scale * x + offset to every coordinate.
LabeledConstruction transform(const LabeledConstruction& c, const Rat& scale,
                              const Point& offset);

struct ConstraintReport {
  struct Item {
    std::string id;
    bool pass = false;
    std::string detail;
  };
  std::vector<Item> items;
  bool all_pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
  std::string summary() const;
};

// Evaluates the construction's constraint ledger exactly (collinearities,
// ray intersections, side conditions, lit-arc structure of V_0, the f'
// geodesic condition).
ConstraintReport constraint_check(const LabeledConstruction& c);

struct HoleCertificate {
  ConstraintReport constraints;
  std::vector<Region> stages;  // V_0, V_1, V_2
  bool lemma1 = false;         // triangle untouched by every first-bounce region
  bool clause_i = false;       // triangle strictly interior
  bool clause_ii = false;      // exactly one hole, equal to the triangle
  bool clause_iii = false;     // all three triangle edges on bd(V_2)
  RegionFace hole;
  std::vector<std::string> blocker_notes;  // sampled diagnostics mirroring the proof

  bool theorem_holds() const { return lemma1 && clause_i && clause_ii && clause_iii; }
};

// Recomputes V_0..V_2 and certifies the hole; throws VerificationFailed with
// the first failing assertion and a witness.
HoleCertificate verify_theorem(const LabeledConstruction& c);

// Sampled geodesic diagnostic: does p block region R from region S?
struct SampleSpec {
  enum Kind { ArcSamples, AreaSamples, PointList } kind = ArcSamples;
  BoundaryArc arc;            // when ArcSamples
  SimplePolygon area;         // when AreaSamples
  std::vector<Point> points;  // when PointList
};

std::vector<Point> spec_samples(const SimplePolygon& poly, const SampleSpec& spec, int density);

struct BlockerResult {
  bool blocks = true;
  std::vector<std::pair<Point, Point>> violations;  // first offending pairs
};

BlockerResult blocker_check(const SimplePolygon& poly, const Point& p, const SampleSpec& r,
                            const SampleSpec& s, int density);

}  // namespace dvis
