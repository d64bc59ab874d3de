#pragma once

#include <string>

#include "dvis/counterexample.hpp"
#include "dvis/oracle.hpp"

namespace dvis {

// Polygon JSON: {"vertices": [["x","y"], ...]} with rational strings.
// Parsing validates: the polygon must be simple and counterclockwise.
SimplePolygon polygon_from_json(const std::string& text);
std::string polygon_to_json(const SimplePolygon& poly);

// Region JSON: {"faces":[{"outer":[...], "holes":[[...], ...]}]}.
Region region_from_json(const std::string& text);
std::string region_to_json(const Region& r);

// Stage list: {"stages":[region, ...]}.
std::string stages_to_json(const DiffuseStages& st);

// Labels JSON for the committed construction.
std::string labels_to_json(const LabeledConstruction& c);
LabeledConstruction construction_from_json(const std::string& polygon_text,
                                           const std::string& labels_text);

std::string oracle_report_to_json(const OracleComparison& cmp);

Point point_from_arg(const std::string& arg);  // "x,y" with rational components

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace dvis
