#pragma once

// Minimal SVG rendering of curves over an obstacle, equal aspect ratio.

#include <optional>
#include <string>
#include <vector>

#include "elastica/obstacle.hpp"
#include "elastica/point.hpp"

namespace elastica::cli {

struct SvgPath {
  std::vector<Point> points;
  std::string stroke = "#1f4e9c";
};

/// The obstacle, if any, is drawn as the filled forbidden region: below psi
/// in standard mode, between -psi and psi in rhomb mode.
std::string render_svg(const std::vector<SvgPath>& paths, const Obstacle* obstacle = nullptr,
                       double width_px = 640.0);

}  // namespace elastica::cli
