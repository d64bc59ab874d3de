#pragma once

#include <optional>
#include <string>

#include "dvis/counterexample.hpp"

namespace dvis {

// Deterministic SVG rendering: identical inputs produce byte-identical
// output. Rational coordinates become decimals (12 significant digits) only
// here, at the final serialization step.
struct RenderSpec {
  int width = 900;
  int height = 900;
  double margin = 24.0;
  double stroke_width = 1.5;
  double label_font_size = 14.0;
};

struct RenderLabels {
  std::vector<std::pair<std::string, Point>> points;
};

std::string render_svg(const SimplePolygon& poly, const std::vector<Region>& stage_regions,
                       const std::vector<RegionFace>& holes,
                       const std::optional<RenderLabels>& labels, const RenderSpec& spec);

}  // namespace dvis
