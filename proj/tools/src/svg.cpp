#include "elastica_cli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace elastica::cli {
namespace {

struct Box {
  double x0 = std::numeric_limits<double>::infinity();
  double y0 = std::numeric_limits<double>::infinity();
  double x1 = -std::numeric_limits<double>::infinity();
  double y1 = -std::numeric_limits<double>::infinity();
  void add(Point p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const std::vector<SvgPath>& paths, const Obstacle* obstacle,
                       double width_px) {
  Box box;
  box.add({0.0, 0.0});
  box.add({1.0, 0.0});
  for (const auto& p : paths)
    for (Point q : p.points) box.add(q);

  constexpr int kSamples = 400;
  std::vector<Point> upper;
  if (obstacle) {
    for (int i = 0; i <= kSamples; ++i) {
      const double x = box.x0 + (box.x1 - box.x0) * i / kSamples;
      const double y = obstacle->value(x);
      if (y > 0.0) upper.push_back({x, y});
    }
    for (Point q : upper) {
      box.add(q);
      if (obstacle->mode() == ConstraintMode::Rhomb) box.add({q.x, -q.y});
    }
  }

  const double span = std::max({box.x1 - box.x0, box.y1 - box.y0, 1e-9});
  const double pad = 0.05 * span;
  box.x0 -= pad;
  box.x1 += pad;
  box.y0 -= pad;
  box.y1 += pad;
  const double scale = width_px / (box.x1 - box.x0);
  const double height_px = scale * (box.y1 - box.y0);
  auto X = [&](double x) { return fmt(scale * (x - box.x0)); };
  auto Y = [&](double y) { return fmt(scale * (box.y1 - y)); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width_px) << "\" height=\""
    << fmt(height_px) << "\" viewBox=\"0 0 " << fmt(width_px) << ' ' << fmt(height_px) << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<line x1=\"" << X(box.x0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(box.x1) << "\" y2=\""
    << Y(0) << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";

  if (obstacle && !upper.empty()) {
    s << "<polygon fill=\"#d9534f\" fill-opacity=\"0.35\" stroke=\"#d9534f\" points=\"";
    for (Point q : upper) s << X(q.x) << ',' << Y(q.y) << ' ';
    if (obstacle->mode() == ConstraintMode::Rhomb) {
      for (auto it = upper.rbegin(); it != upper.rend(); ++it) s << X(it->x) << ',' << Y(-it->y) << ' ';
    } else {
      s << X(upper.back().x) << ',' << Y(box.y0) << ' ' << X(upper.front().x) << ',' << Y(box.y0);
    }
    s << "\"/>\n";
  }

  for (const auto& p : paths) {
    if (p.points.empty()) continue;
    s << "<path fill=\"none\" stroke=\"" << p.stroke << "\" stroke-width=\"2\" d=\"M";
    for (std::size_t i = 0; i < p.points.size(); ++i)
      s << (i ? " L" : "") << X(p.points[i].x) << ',' << Y(p.points[i].y);
    s << "\"/>\n";
  }
  for (Point q : {Point{0.0, 0.0}, Point{1.0, 0.0}})
    s << "<circle cx=\"" << X(q.x) << "\" cy=\"" << Y(q.y) << "\" r=\"3\" fill=\"black\"/>\n";
  s << "</svg>\n";
  return s.str();
}

}  // namespace elastica::cli
