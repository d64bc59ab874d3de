#pragma once

#include <map>
#include <vector>

#include "dvis/geom.hpp"

namespace dvis {

// Planar subdivision induced by a set of segments. Built by exact pairwise
// splitting (collinear overlaps merged into shared atoms), faces extracted by
// interior-on-the-left cycle walks. Every bounded face carries an exact
// rational sample point strictly in its interior.
class Arrangement {
 public:
  explicit Arrangement(const std::vector<Segment>& segments);

  struct Cycle {
    std::vector<int> hes;  // half-edges in walk order, face on the left
    Rat area2{0};
    int face = -1;
  };
  struct Face {
    int outer_cycle = -1;  // -1: unbounded face
    std::vector<int> inner_cycles;
    Point sample;  // valid iff bounded
    bool bounded() const { return outer_cycle >= 0; }
  };

  int vertex_count() const { return static_cast<int>(verts_.size()); }
  const Point& vertex(int v) const { return verts_[v]; }

  int half_edge_count() const { return static_cast<int>(he_from_.size()); }
  int from(int h) const { return he_from_[h]; }
  int to(int h) const { return he_to_[h]; }
  static int twin(int h) { return h ^ 1; }
  int face_of(int h) const { return he_face_[h]; }
  Point he_dir(int h) const { return verts_[he_to_[h]] - verts_[he_from_[h]]; }

  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  int unbounded_face() const { return unbounded_face_; }

 private:
  void build(const std::vector<Segment>& segments);
  Point face_sample(const Cycle& outer) const;
  std::optional<Point> cycle_probe(const Cycle& cycle) const;
  std::optional<Rat> first_hit_above(const Point& m) const;
  std::optional<Rat> first_hit_west(const Point& m) const;

  std::vector<Point> verts_;
  std::vector<int> he_from_, he_to_, he_next_, he_face_;
  std::vector<Cycle> cycles_;
  std::vector<Face> faces_;
  int unbounded_face_ = -1;
};

}  // namespace dvis
