#pragma once

#include <cstdint>
#include <string>

#include "dvis/diffuse.hpp"

namespace dvis {

// Random points untangled by 2-opt until simple; collinear vertex triples are
// perturbed away, so outputs are in general position. Deterministic per seed.
SimplePolygon random_simple_polygon(int n, std::uint64_t seed);

// Census source: centroid when interior, else deterministic rejection sample.
Point census_source(const SimplePolygon& poly, std::uint64_t seed);

struct CensusRecord {
  std::uint64_t seed = 0;
  int n = 0;
  Point source;
  std::vector<int> holes_per_k;       // index k
  std::vector<Rat> hole_area2_per_k;  // twice total hole area
  std::vector<long> millis_per_k;
  bool failed = false;
  std::string error;
  bool k1_hole() const {
    return holes_per_k.size() > 1 && holes_per_k[1] > 0;
  }
};

struct CensusInstance {
  std::uint64_t seed;
  SimplePolygon poly;
  Point source;
};

std::vector<CensusRecord> hole_census(const std::vector<CensusInstance>& instances, int kmax);

std::string census_csv(const std::vector<CensusRecord>& records);

}  // namespace dvis
