#include "elastica/energy.hpp"

#include <algorithm>
#include <cmath>

namespace elastica {

EnergyParts discrete_energy(const DiscreteCurve& c, double lambda) {
  const auto th = c.angles();
  const double h = c.segment_length();
  double sum = 0.0;
  for (std::size_t i = 1; i < th.size(); ++i) {
    const double d = th[i] - th[i - 1];
    sum += d * d;
  }
  EnergyParts e;
  e.bending = sum / h;
  e.length = c.total_length();
  e.total = e.bending + lambda * e.length;
  return e;
}

double obstacle_violation(std::span<const Point> nodes, const Obstacle& obstacle) {
  double worst = 0.0;
  for (const Point& p : nodes) worst = std::max(worst, -obstacle.slack(p));
  return worst;
}

std::vector<Point> obstacle_penalty_gradient(std::span<const Point> nodes,
                                             const Obstacle& obstacle, double weight) {
  std::vector<Point> g(nodes.size());
  const bool rhomb = obstacle.mode() == ConstraintMode::Rhomb;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double v = -obstacle.slack(nodes[i]);
    if (v <= 0.0) continue;
    // d(slack)/dx = -psi'(x), d(slack)/dy = 1 (or sign(y) in rhomb mode)
    const double dy = rhomb ? (nodes[i].y < 0.0 ? -1.0 : 1.0) : 1.0;
    const double dx = -obstacle.derivative(nodes[i].x);
    g[i] = {-2.0 * weight * v * dx, -2.0 * weight * v * dy};
  }
  return g;
}

double penalized_energy(const DiscreteCurve& c, double lambda, const Penalties& p) {
  double e = discrete_energy(c, lambda).total;
  if ((p.obstacle && p.obstacle_weight > 0.0) || p.endpoint_weight > 0.0) {
    const auto pts = c.positions();
    if (p.obstacle && p.obstacle_weight > 0.0) {
      for (const Point& x : pts) {
        const double v = std::max(0.0, -p.obstacle->slack(x));
        e += p.obstacle_weight * v * v;
      }
    }
    if (p.endpoint_weight > 0.0) {
      const Point d = pts.back() - p.endpoint_target;
      e += p.endpoint_weight * dot(d, d);
    }
  }
  return e;
}

std::vector<double> energy_gradient(const DiscreteCurve& c, double lambda,
                                    const Penalties& p) {
  const auto th = c.angles();
  const std::size_t n = th.size();
  const double h = c.segment_length();
  const double len = c.total_length();
  std::vector<double> g(n + 1, 0.0);

  double sum = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double d = th[i] - th[i - 1];
    sum += d * d;
    g[i] += 2.0 * d / h;
    g[i - 1] -= 2.0 * d / h;
  }
  // B = sum / h = N * sum / L
  g[n] = -sum / (h * len) + lambda;

  const bool obstacle_on = p.obstacle && p.obstacle_weight > 0.0;
  if (!obstacle_on && !(p.endpoint_weight > 0.0)) return g;

  const auto pts = c.positions();
  std::vector<Point> node_grad(n + 1);
  if (obstacle_on) node_grad = obstacle_penalty_gradient(pts, *p.obstacle, p.obstacle_weight);
  if (p.endpoint_weight > 0.0) {
    const Point d = pts.back() - p.endpoint_target;
    node_grad[n] = node_grad[n] + 2.0 * p.endpoint_weight * d;
  }

  // x_i = base + h * sum_{j<i} (cos th_j, sin th_j):
  //   dx_i/dth_j = h (-sin th_j, cos th_j) for j < i,  dx_i/dL = (x_i - base) / L.
  Point tail{};
  for (std::size_t j = n; j-- > 0;) {
    tail = tail + node_grad[j + 1];
    g[j] += h * (-std::sin(th[j]) * tail.x + std::cos(th[j]) * tail.y);
  }
  const Point base = c.base_point();
  for (std::size_t i = 1; i <= n; ++i) g[n] += dot(node_grad[i], pts[i] - base) / len;
  return g;
}

}  // namespace elastica
