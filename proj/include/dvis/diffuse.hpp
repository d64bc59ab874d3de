#pragma once

#include <optional>

#include "dvis/visibility.hpp"

namespace dvis {

// Maximal lit reflector pieces per edge of P, as closed parameter intervals
// intersected with the open edge interior. An interval end at parameter 0 or
// 1 sits at an absorbed vertex and is treated as open there; lo == hi is a
// point reflector.
struct LitSet {
  struct Piece {
    Rat lo, hi;
  };
  std::vector<std::vector<Piece>> per_edge;

  bool any() const {
    for (const auto& e : per_edge)
      if (!e.empty()) return true;
    return false;
  }
  // every edge's full open interior is lit
  bool full_cover() const {
    for (const auto& e : per_edge)
      if (e.size() != 1 || e[0].lo != 0 || e[0].hi != 1) return false;
    return !per_edge.empty();
  }
};

LitSet lit_segments(const SimplePolygon& poly, const Region& r);

struct ReflectionTrace {
  std::vector<Point> points;  // s, reflectors..., target
  int reflections() const { return static_cast<int>(points.size()) - 2; }
};

bool trace_valid(const SimplePolygon& poly, const ReflectionTrace& t);

struct DiffuseStages {
  std::vector<Region> stages;  // V_0 .. V_k
  const Region& last() const { return stages.back(); }
};

inline constexpr int kDefaultReflectionCap = 8;

// V_0 = V(s); V_{i+1} = V_i united with the weak visibility of every lit
// reflector piece of V_i. All intermediate stages are retained.
DiffuseStages compute_Vk(const SimplePolygon& poly, const Point& s, int k,
                         int cap = kDefaultReflectionCap);

// Witness path with at most k reflections, or nothing. Closure-boundary
// targets that admit no strict sight chain yield nothing.
std::optional<ReflectionTrace> k_visible_witness(const SimplePolygon& poly, const Point& s,
                                                 const Point& y, int k,
                                                 int cap = kDefaultReflectionCap);

}  // namespace dvis
