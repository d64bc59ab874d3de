#include "dvis/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace dvis {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct Mapper {
  double sx, sy, tx, ty;
  double X(const Rat& x) const { return sx * rat_double(x) + tx; }
  double Y(const Rat& y) const { return sy * rat_double(y) + ty; }
};

std::string ring_path(const SimplePolygon& p, const Mapper& m) {
  std::ostringstream d;
  for (int i = 0; i < p.n(); ++i) {
    d << (i == 0 ? "M" : "L") << num(m.X(p.vertices[i].x)) << " " << num(m.Y(p.vertices[i].y));
  }
  d << "Z";
  return d.str();
}

const char* kStageFills[] = {"#ffd54d", "#7fc97f", "#6aa9e0", "#c79fe0"};

}  // namespace

std::string render_svg(const SimplePolygon& poly, const std::vector<Region>& stage_regions,
                       const std::vector<RegionFace>& holes,
                       const std::optional<RenderLabels>& labels, const RenderSpec& spec) {
  Rat xmin = poly.vertices[0].x, xmax = xmin, ymin = poly.vertices[0].y, ymax = ymin;
  for (const Point& p : poly.vertices) {
    xmin = min(xmin, p.x);
    xmax = max(xmax, p.x);
    ymin = min(ymin, p.y);
    ymax = max(ymax, p.y);
  }
  double w = rat_double(Rat(xmax - xmin)), h = rat_double(Rat(ymax - ymin));
  if (w <= 0) w = 1;
  if (h <= 0) h = 1;
  double usable_w = spec.width - 2 * spec.margin, usable_h = spec.height - 2 * spec.margin;
  double scale = std::min(usable_w / w, usable_h / h);

  Mapper m;
  m.sx = scale;
  m.sy = -scale;  // svg y grows downward
  m.tx = spec.margin - scale * rat_double(xmin);
  m.ty = spec.height - spec.margin + scale * rat_double(ymin);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height << "\">\n";
  svg << "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" patternTransform=\"rotate(45)\" "
         "patternUnits=\"userSpaceOnUse\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" "
         "stroke=\"#b3122e\" stroke-width=\"1.5\"/></pattern></defs>\n";

  // stage regions, translucent fills, later stages under earlier ones
  for (size_t s = stage_regions.size(); s-- > 0;) {
    const char* fill = kStageFills[s % 4];
    for (const RegionFace& f : stage_regions[s].faces) {
      svg << "<path fill-rule=\"evenodd\" fill=\"" << fill << "\" fill-opacity=\"0.45\" "
          << "stroke=\"" << fill << "\" stroke-width=\"0.6\" d=\"" << ring_path(f.outer, m);
      for (const SimplePolygon& hole : f.holes) svg << " " << ring_path(hole, m);
      svg << "\"/>\n";
    }
  }

  for (const RegionFace& f : holes) {
    svg << "<path fill=\"url(#hatch)\" stroke=\"#b3122e\" stroke-width=\"1\" d=\""
        << ring_path(f.outer, m) << "\"/>\n";
  }

  svg << "<path fill=\"none\" stroke=\"#101010\" stroke-width=\"" << num(spec.stroke_width)
      << "\" d=\"" << ring_path(poly, m) << "\"/>\n";

  if (labels) {
    for (const auto& [name, p] : labels->points) {
      double x = m.X(p.x), y = m.Y(p.y);
      svg << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y)
          << "\" r=\"2.5\" fill=\"#101010\"/>\n";
      svg << "<text x=\"" << num(x + 4) << "\" y=\"" << num(y - 4) << "\" font-size=\""
          << num(spec.label_font_size) << "\" font-family=\"monospace\">" << name
          << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace dvis
