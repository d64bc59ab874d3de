#pragma once

#include <stdexcept>
#include <string>

namespace dvis {

struct RayEscapes : std::runtime_error {
  explicit RayEscapes(const std::string& m) : std::runtime_error(m) {}
};
struct SourceOutside : std::runtime_error {
  explicit SourceOutside(const std::string& m) : std::runtime_error(m) {}
};
struct EndpointNotOnBoundary : std::runtime_error {
  explicit EndpointNotOnBoundary(const std::string& m) : std::runtime_error(m) {}
};
struct SegmentNotOnEdgeInterior : std::runtime_error {
  explicit SegmentNotOnEdgeInterior(const std::string& m) : std::runtime_error(m) {}
};
struct PointOutside : std::runtime_error {
  explicit PointOutside(const std::string& m) : std::runtime_error(m) {}
};
struct GenerationFailed : std::runtime_error {
  explicit GenerationFailed(const std::string& m) : std::runtime_error(m) {}
};
struct VerificationFailed : std::runtime_error {
  explicit VerificationFailed(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace dvis
