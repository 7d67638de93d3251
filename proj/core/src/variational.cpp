#include "elastica/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace elastica {

double default_touch_tolerance(const Obstacle& obstacle) {
  return 1e-3 * obstacle.peak_height();
}

CoincidenceSummary constraint_slack(std::span<const Point> nodes, const Obstacle& obstacle,
                                    double touch_tol) {
  CoincidenceSummary out;
  out.touch_tol = touch_tol < 0.0 ? default_touch_tolerance(obstacle) : touch_tol;
  out.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double s = obstacle.slack(nodes[i]);
    if (s < out.min_gap) {
      out.min_gap = s;
      out.min_gap_node = i;
    }
    if (s <= out.touch_tol) out.touch_nodes.push_back(i);
  }
  out.touching = out.min_gap <= out.touch_tol;
  return out;
}

CoincidenceSummary constraint_slack(const DiscreteCurve& c, const Obstacle& obstacle,
                                    double touch_tol) {
  const auto pts = c.positions();
  return constraint_slack(pts, obstacle, touch_tol);
}

std::vector<double> bump(const DiscreteCurve& c, double center, double width,
                         BumpShape shape) {
  if (!(width > 0.0)) throw std::invalid_argument("bump: width must be positive");
  const std::size_t n = c.segments();
  std::vector<double> phi(n + 1, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    const double z = (c.node_arclength(i) - center) / width;
    if (std::abs(z) >= 1.0) continue;
    phi[i] = shape == BumpShape::Hat ? 1.0 - std::abs(z)
                                     : std::exp(1.0 - 1.0 / (1.0 - z * z));
  }
  return phi;
}

double vi_pairing(const DiscreteCurve& c, double lambda, std::span<const double> phi) {
  const std::size_t n = c.segments();
  if (phi.size() != n + 1)
    throw std::invalid_argument("vi_pairing: phi must have one sample per node");
  for (double v : phi)
    if (v < 0.0 || !std::isfinite(v))
      throw std::invalid_argument("vi_pairing: test function must be nonnegative");
  if (phi.front() != 0.0 || phi.back() != 0.0)
    throw std::invalid_argument("vi_pairing: test function must vanish at the ends");

  const double h = c.segment_length();
  const auto k = node_curvatures(c);
  const auto tau = node_tangent_angles(c);
  double total = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double d1 = (phi[i + 1] - phi[i - 1]) / (2.0 * h);
    const double d2 = (phi[i + 1] - 2.0 * phi[i] + phi[i - 1]) / (h * h);
    // n = (-sin tau, cos tau), t = (cos tau, sin tau)
    const double ne2 = std::cos(tau[i]);
    const double te2 = std::sin(tau[i]);
    total += h * (2.0 * k[i] * ne2 * d2 - 3.0 * k[i] * k[i] * te2 * d1 -
                  lambda * k[i] * ne2 * phi[i]);
  }
  return total;
}

bool VerticalityReport::passes() const {
  return std::none_of(flagged.begin(), flagged.end(), [](bool f) { return f; });
}

VerticalityReport nonverticality_check(const DiscreteCurve& c, const Obstacle& obstacle,
                                       double tol, double touch_tol) {
  const auto summary = constraint_slack(c, obstacle, touch_tol);
  const auto tau = node_tangent_angles(c);
  VerticalityReport out;
  for (std::size_t i : summary.touch_nodes) {
    out.touch_nodes.push_back(i);
    out.flagged.push_back(std::abs(std::cos(tau[i])) < std::sin(tol));
  }
  return out;
}

double c_psi(const Obstacle& cone) {
  const auto* c = std::get_if<SymmetricCone>(&cone.kind());
  if (!c) throw std::invalid_argument("c_psi: obstacle must be a symmetric cone");
  const double apex = std::atan(2.0 * c->height);
  return std::min(std::atan(c->slope) - apex, apex);
}

}  // namespace elastica
