#pragma once

#include <optional>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/obstacle.hpp"

namespace elastica {

struct EnergyParts {
  double bending = 0.0;  ///< B = sum over interior nodes of (theta_{i} - theta_{i-1})^2 / h
  double length = 0.0;   ///< L
  double total = 0.0;    ///< B + lambda * L
};

EnergyParts discrete_energy(const DiscreteCurve& c, double lambda);

/// Quadratic penalty terms added on top of E_lambda.
///
///   obstacle: w_obs * sum_i max(0, -slack_i)^2 over all nodes
///   endpoint: w_end * |x_N - target|^2
struct Penalties {
  const Obstacle* obstacle = nullptr;
  double obstacle_weight = 0.0;
  double endpoint_weight = 0.0;
  Point endpoint_target{1.0, 0.0};
};

/// E_lambda plus the penalty terms.
double penalized_energy(const DiscreteCurve& c, double lambda, const Penalties& p = {});

/// Analytic gradient of penalized_energy with respect to (theta_1..theta_N, L).
/// The returned vector has N + 1 entries; the last is the L-derivative.
std::vector<double> energy_gradient(const DiscreteCurve& c, double lambda,
                                    const Penalties& p = {});

/// Gradient with respect to the node positions of the obstacle penalty alone;
/// N + 1 entries, zero at nodes with nonnegative slack.
std::vector<Point> obstacle_penalty_gradient(std::span<const Point> nodes,
                                             const Obstacle& obstacle, double weight);

/// Largest constraint violation max_i max(0, -slack_i) over the nodes.
double obstacle_violation(std::span<const Point> nodes, const Obstacle& obstacle);

}  // namespace elastica
