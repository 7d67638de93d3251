#include "elastica/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "elastica/curve.hpp"

namespace elastica {
namespace {

double smooth_bump(double z) {
  return std::abs(z) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - z * z)) : 0.0;
}

}  // namespace

std::string to_string(StabilityVerdict v) {
  return v == StabilityVerdict::Unstable ? "Unstable" : "LocalMin-consistent";
}

std::vector<Point> scf_nodes(const zoo::ScfSpec& scf, std::size_t segments) {
  const double L = 2.0 * scf.half_length;
  std::vector<Point> nodes(segments + 1);
  for (std::size_t i = 0; i <= segments; ++i)
    nodes[i] = zoo::scf_sample(scf, L * static_cast<double>(i) / static_cast<double>(segments));
  nodes.front() = {0.0, 0.0};
  nodes.back() = {1.0, 0.0};
  return nodes;
}

StabilityReport scf_stability_probe(double tip_height, const ProbeOptions& opt) {
  StabilityReport rep;
  rep.scf = zoo::make_scf(tip_height);
  const std::size_t n = opt.segments;
  const double L = 2.0 * rep.scf.half_length;
  const double h = L / static_cast<double>(n);

  const auto nodes = scf_nodes(rep.scf, n);
  rep.bending = polyline_bending(nodes);
  const double fine = polyline_bending(scf_nodes(rep.scf, 2 * n));
  rep.noise_floor = std::max(3.0 * std::abs(rep.bending - fine), 1e-12 * rep.bending);

  auto record = [&](std::string kind, double eps, double width, double delta) {
    rep.rays.push_back({std::move(kind), eps, width, delta});
    rep.best_delta = std::min(rep.best_delta, delta);
  };

  // Upward bumps around the tip keep the curve above the obstacle.
  for (double wf : opt.widths) {
    const double w = wf * L;
    for (double eps : opt.epsilons) {
      auto p = nodes;
      for (std::size_t i = 1; i < n; ++i)
        p[i].y += eps * smooth_bump((static_cast<double>(i) * h - 0.5 * L) / w);
      record("tip-bump", eps, w, polyline_bending(p) - rep.bending);
    }
  }

  // Vertical end tangents: prepend and append vertical segments, which keeps
  // B, then push the joints outward.
  const double th0 = zoo::scf_tangent_angle(rep.scf, 0.0);
  rep.vertical_ends = std::abs(std::cos(th0)) <= opt.vertical_tol;
  if (rep.vertical_ends) {
    const auto m_nodes = static_cast<std::size_t>(std::max(1.0, std::round(opt.insertion_length / h)));
    const double m = static_cast<double>(m_nodes) * h;
    std::vector<Point> base;
    std::vector<double> tau;
    for (std::size_t i = 0; i < m_nodes; ++i) {
      base.push_back({0.0, static_cast<double>(i) * h});
      tau.push_back(0.5 * std::numbers::pi);
    }
    for (std::size_t i = 0; i <= n; ++i) {
      base.push_back(nodes[i] + Point{0.0, m});
      tau.push_back(zoo::scf_tangent_angle(rep.scf, static_cast<double>(i) * h));
    }
    for (std::size_t i = 1; i <= m_nodes; ++i) {
      base.push_back({1.0, m - static_cast<double>(i) * h});
      tau.push_back(-0.5 * std::numbers::pi);
    }
    const double joint_left = m;
    const double joint_right = m + L;
    for (double wf : opt.insertion_widths) {
      const double w = wf * m;
      for (double eps : opt.insertion_epsilons) {
        auto p = base;
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
          const double s = static_cast<double>(i) * h;
          const double phi = smooth_bump((s - joint_left) / w) + smooth_bump((s - joint_right) / w);
          if (phi == 0.0) continue;
          const Point normal{-std::sin(tau[i]), std::cos(tau[i])};
          p[i] = p[i] + eps * phi * normal;
        }
        record("segment-insertion", eps, w, polyline_bending(p) - rep.bending);
      }
    }
  }

  rep.verdict = rep.best_delta < -rep.noise_floor ? StabilityVerdict::Unstable
                                                  : StabilityVerdict::LocalMinConsistent;
  return rep;
}

}  // namespace elastica
