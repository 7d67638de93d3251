#include "elastica/obstacle.hpp"

#include <algorithm>
#include <cmath>

namespace elastica {
namespace {

struct ValueVisitor {
  double x;
  double operator()(const SymmetricCone& c) const {
    return c.height - c.slope * std::abs(x - 0.5);
  }
  double operator()(const SampledLipschitz& s) const {
    const auto& n = s.nodes;
    if (x <= n.front().x) return n.front().y;
    if (x >= n.back().x) return n.back().y;
    const auto it = std::upper_bound(n.begin(), n.end(), x,
                                     [](double v, const Point& p) { return v < p.x; });
    const Point& b = *it;
    const Point& a = *(it - 1);
    const double t = (x - a.x) / (b.x - a.x);
    return a.y + t * (b.y - a.y);
  }
};

struct DerivativeVisitor {
  double x;
  double operator()(const SymmetricCone& c) const { return x < 0.5 ? c.slope : -c.slope; }
  double operator()(const SampledLipschitz& s) const {
    const auto& n = s.nodes;
    if (x < n.front().x || x >= n.back().x) return 0.0;
    const auto it = std::upper_bound(n.begin(), n.end(), x,
                                     [](double v, const Point& p) { return v < p.x; });
    const Point& b = *it;
    const Point& a = *(it - 1);
    return (b.y - a.y) / (b.x - a.x);
  }
};

void validate(const SymmetricCone& c) {
  if (!(c.height > 0.0) || !std::isfinite(c.height))
    throw ObstacleError("cone: height must be positive (A3)");
  if (!(c.slope > 2.0 * c.height) || !std::isfinite(c.slope))
    throw ObstacleError("cone: slope must exceed 2*height so that psi(0) < 0 (A2)");
}

void validate(SampledLipschitz& s) {
  auto& n = s.nodes;
  if (n.size() < 2) throw ObstacleError("sampled obstacle: need at least two nodes");
  std::sort(n.begin(), n.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
  double steepest = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (!std::isfinite(n[i].x) || !std::isfinite(n[i].y))
      throw ObstacleError("sampled obstacle: non-finite node");
    if (i > 0) {
      const double dx = n[i].x - n[i - 1].x;
      if (!(dx > 0.0)) throw ObstacleError("sampled obstacle: duplicate node abscissa");
      steepest = std::max(steepest, std::abs(n[i].y - n[i - 1].y) / dx);
    }
  }
  if (!(s.lipschitz > 0.0)) s.lipschitz = steepest;
  if (steepest > s.lipschitz * (1.0 + 1e-12))
    throw ObstacleError("sampled obstacle: nodes violate the stated Lipschitz constant");
}

}  // namespace

Obstacle::Obstacle(Kind kind, ConstraintMode mode) : kind_(std::move(kind)), mode_(mode) {
  std::visit([](auto& k) { validate(k); }, kind_);
  if (auto* s = std::get_if<SampledLipschitz>(&kind_)) {
    // (A2): piecewise linear, so checking nodes off (0,1) and the values at
    // 0 and 1 covers the half-lines.
    for (const Point& p : s->nodes)
      if ((p.x <= 0.0 || p.x >= 1.0) && !(p.y < 0.0))
        throw ObstacleError("sampled obstacle: psi must be negative outside (0,1) (A2)");
    if (!(value(0.0) < 0.0) || !(value(1.0) < 0.0))
      throw ObstacleError("sampled obstacle: psi(0) and psi(1) must be negative (A2)");
    if (!(peak_height() > 0.0))
      throw ObstacleError("sampled obstacle: max psi on [0,1] must be positive (A3)");
  }
}

Obstacle Obstacle::cone(double height, ConstraintMode mode) {
  return Obstacle(SymmetricCone{4.0 * height, height}, mode);
}

Obstacle Obstacle::cone(double height, double slope, ConstraintMode mode) {
  return Obstacle(SymmetricCone{slope, height}, mode);
}

double Obstacle::value(double x) const { return std::visit(ValueVisitor{x}, kind_); }

double Obstacle::derivative(double x) const {
  return std::visit(DerivativeVisitor{x}, kind_);
}

double Obstacle::peak_height() const {
  if (const auto* c = std::get_if<SymmetricCone>(&kind_)) return c->height;
  const auto& s = std::get<SampledLipschitz>(kind_);
  double best = std::max(value(0.0), value(1.0));
  for (const Point& p : s.nodes)
    if (p.x > 0.0 && p.x < 1.0) best = std::max(best, p.y);
  return best;
}

double Obstacle::slack(Point p) const {
  const double y = mode_ == ConstraintMode::Rhomb ? std::abs(p.y) : p.y;
  return y - value(p.x);
}

std::string to_string(ConstraintMode mode) {
  return mode == ConstraintMode::Rhomb ? "rhomb" : "standard";
}

}  // namespace elastica
