#include "elastica/curve.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace elastica {

DiscreteCurve::DiscreteCurve(double total_length, std::vector<double> angles, Point base)
    : length_(total_length), angles_(std::move(angles)), base_(base) {
  if (!(length_ > 0.0) || !std::isfinite(length_))
    throw CurveError("DiscreteCurve: total length must be positive and finite");
  if (angles_.size() < kMinSegments)
    throw CurveError("DiscreteCurve: need at least " + std::to_string(kMinSegments) +
                     " segments, got " + std::to_string(angles_.size()));
  for (double a : angles_)
    if (!std::isfinite(a)) throw CurveError("DiscreteCurve: non-finite angle");
  if (!std::isfinite(base_.x) || !std::isfinite(base_.y))
    throw CurveError("DiscreteCurve: non-finite base point");
}

std::vector<Point> DiscreteCurve::positions() const {
  const double h = segment_length();
  std::vector<Point> pts;
  pts.reserve(angles_.size() + 1);
  Point p = base_;
  pts.push_back(p);
  for (double a : angles_) {
    p.x += h * std::cos(a);
    p.y += h * std::sin(a);
    pts.push_back(p);
  }
  return pts;
}

Point DiscreteCurve::end_point() const { return positions().back(); }

DiscreteCurve DiscreteCurve::scaled(double r) const {
  return DiscreteCurve(r * length_, angles_, r * base_);
}

std::vector<Point> positions(const DiscreteCurve& c) { return c.positions(); }

DiscreteCurve mirror_half(std::span<const double> half_angles, double half_length,
                          Point base) {
  std::vector<double> full(half_angles.begin(), half_angles.end());
  full.reserve(2 * half_angles.size());
  for (auto it = half_angles.rbegin(); it != half_angles.rend(); ++it) full.push_back(-*it);
  return DiscreteCurve(2.0 * half_length, std::move(full), base);
}

std::vector<double> node_curvatures(const DiscreteCurve& c) {
  const auto th = c.angles();
  const double h = c.segment_length();
  std::vector<double> k(th.size() + 1, 0.0);
  for (std::size_t i = 1; i < th.size(); ++i) k[i] = (th[i] - th[i - 1]) / h;
  return k;
}

std::vector<double> node_tangent_angles(const DiscreteCurve& c) {
  const auto th = c.angles();
  std::vector<double> t(th.size() + 1);
  t.front() = th.front();
  t.back() = th.back();
  for (std::size_t i = 1; i < th.size(); ++i) t[i] = 0.5 * (th[i - 1] + th[i]);
  return t;
}

double polyline_bending(std::span<const Point> points) {
  double total = 0.0;
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    const Point a = points[i] - points[i - 1];
    const Point b = points[i + 1] - points[i];
    const double turn = std::atan2(cross(a, b), dot(a, b));
    const double ds = 0.5 * (norm(a) + norm(b));
    total += turn * turn / ds;
  }
  return total;
}

}  // namespace elastica
