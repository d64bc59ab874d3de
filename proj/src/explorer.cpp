#include "dvis/explorer.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "dvis/errors.hpp"

namespace dvis {

namespace {

constexpr int kCoordRange = 1024;

bool edges_cross(const SimplePolygon& p, int i, int j) {
  SegIntersection x = intersect_segments(p.edge(i), p.edge(j));
  bool adjacent = (j == (i + 1) % p.n()) || (i == (j + 1) % p.n());
  if (adjacent) {
    const Point& shared = (j == (i + 1) % p.n()) ? p.vertex(j) : p.vertex(i);
    return x.kind == SegIntersection::Overlap ||
           (x.kind == SegIntersection::At && x.point != shared);
  }
  return x.kind != SegIntersection::Empty;
}

// 2-opt untangling: reversing the chain between a crossing pair strictly
// decreases total length, so this terminates.
bool untangle(SimplePolygon& p, int budget) {
  for (int round = 0; round < budget; ++round) {
    bool crossing = false;
    for (int i = 0; i < p.n() && !crossing; ++i) {
      for (int j = i + 1; j < p.n() && !crossing; ++j) {
        if (!edges_cross(p, i, j)) continue;
        crossing = true;
        std::reverse(p.vertices.begin() + i + 1, p.vertices.begin() + j + 1);
      }
    }
    if (!crossing) return true;
  }
  return false;
}

std::optional<std::array<int, 3>> collinear_triple(const SimplePolygon& p) {
  for (int i = 0; i < p.n(); ++i)
    for (int j = i + 1; j < p.n(); ++j)
      for (int k = j + 1; k < p.n(); ++k)
        if (orient(p.vertex(i), p.vertex(j), p.vertex(k)) == Orient::COLLINEAR)
          return std::array<int, 3>{i, j, k};
  return std::nullopt;
}

}  // namespace

SimplePolygon random_simple_polygon(int n, std::uint64_t seed) {
  if (n < 3) throw GenerationFailed("need at least 3 vertices");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(0, kCoordRange);

  for (int attempt = 0; attempt < 64; ++attempt) {
    SimplePolygon p;
    p.vertices.reserve(n);
    for (int i = 0; i < n; ++i) p.vertices.emplace_back(Rat(coord(rng)), Rat(coord(rng)));

    bool distinct = true;
    for (int i = 0; i < n && distinct; ++i)
      for (int j = i + 1; j < n && distinct; ++j)
        if (p.vertices[i] == p.vertices[j]) distinct = false;
    if (!distinct) continue;

    bool ok = false;
    for (int fix = 0; fix < 32; ++fix) {
      if (!untangle(p, 4 * n * n)) break;
      auto triple = collinear_triple(p);
      if (!triple) {
        ok = true;
        break;
      }
      // perturb the middle vertex of the triple and re-untangle
      Point& v = p.vertices[(*triple)[1]];
      v.x += Rat(1 + static_cast<int>(rng() % 7));
      v.y += Rat(1 + static_cast<int>(rng() % 7));
    }
    if (!ok) continue;

    if (p.signed_area2() < 0) std::reverse(p.vertices.begin(), p.vertices.end());
    ValidationReport rep = validate(p);
    if (rep.accepted() && rep.general_position) return p;
  }
  throw GenerationFailed("random polygon generation exhausted retries");
}

Point census_source(const SimplePolygon& poly, std::uint64_t seed) {
  Rat cx(0), cy(0);
  for (const Point& p : poly.vertices) {
    cx += p.x;
    cy += p.y;
  }
  Point centroid(cx / poly.n(), cy / poly.n());
  if (classify_point(poly, centroid).where == Where::INTERIOR) return centroid;

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  Rat xmin = poly.vertices[0].x, xmax = xmin, ymin = poly.vertices[0].y, ymax = ymin;
  for (const Point& p : poly.vertices) {
    xmin = min(xmin, p.x);
    xmax = max(xmax, p.x);
    ymin = min(ymin, p.y);
    ymax = max(ymax, p.y);
  }
  for (int tries = 0; tries < 4096; ++tries) {
    Rat fx(static_cast<int>(rng() % 65537), 65537);
    Rat fy(static_cast<int>(rng() % 65537), 65537);
    fx.canonicalize();
    fy.canonicalize();
    Point cand(xmin + fx * (xmax - xmin), ymin + fy * (ymax - ymin));
    if (classify_point(poly, cand).where == Where::INTERIOR) return cand;
  }
  throw GenerationFailed("no interior source found");
}

std::vector<CensusRecord> hole_census(const std::vector<CensusInstance>& instances, int kmax) {
  std::vector<CensusRecord> records;
  for (const CensusInstance& inst : instances) {
    CensusRecord rec;
    rec.seed = inst.seed;
    rec.n = inst.poly.n();
    rec.source = inst.source;
    try {
      auto t0 = std::chrono::steady_clock::now();
      DiffuseStages st = compute_Vk(inst.poly, inst.source, kmax);
      for (int k = 0; k <= kmax; ++k) {
        auto holes = holes_of(inst.poly, st.stages[k]);
        Rat area(0);
        for (const RegionFace& h : holes) area += h.area2();
        auto t1 = std::chrono::steady_clock::now();
        rec.holes_per_k.push_back(static_cast<int>(holes.size()));
        rec.hole_area2_per_k.push_back(area);
        rec.millis_per_k.push_back(
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
        t0 = t1;
      }
    } catch (const std::exception& e) {
      rec.failed = true;
      rec.error = e.what();
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::string census_csv(const std::vector<CensusRecord>& records) {
  std::ostringstream out;
  out << "seed,n,k,holes,total_hole_area,millis\n";
  for (const CensusRecord& r : records) {
    if (r.failed) {
      out << r.seed << "," << r.n << ",error," << r.error << ",,\n";
      continue;
    }
    for (size_t k = 0; k < r.holes_per_k.size(); ++k) {
      Rat area = r.hole_area2_per_k[k] / 2;
      out << r.seed << "," << r.n << "," << k << "," << r.holes_per_k[k] << ","
          << rat_str(area) << "," << r.millis_per_k[k] << "\n";
    }
  }
  return out.str();
}

}  // namespace dvis
