#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mg/geom.hpp"
#include "mg/region.hpp"

namespace mg {

struct SvgRegionLayer {
  std::string name;
  Region region;
  std::string color;  // CSS color; empty picks from the palette
};

struct SvgSegmentLayer {
  std::string name;
  std::vector<Segment> segments;
  std::string color;
};

struct SvgScene {
  SimplePolygon polygon;
  std::optional<Point> query;
  std::vector<Point> markers;
  std::vector<SvgRegionLayer> regions;
  std::vector<SvgSegmentLayer> segments;
};

/// SVG 1.1 document with the y axis pointing up. Output is a pure function
/// of the scene. Coordinates are printed with 12 significant digits.
std::string render_svg(const SvgScene& scene);

}  // namespace mg
