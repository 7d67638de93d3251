#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "elastica/point.hpp"

namespace elastica {

class ObstacleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// psi(x) = height - slope * |x - 1/2|. Zeros at 1/2 -+ height/slope, which
/// must lie inside (0, 1/2) and (1/2, 1) so that psi < 0 off (0, 1).
struct SymmetricCone {
  double slope;
  double height;
};

/// Piecewise-linear interpolation of nodes sorted by x, extended by constants
/// beyond the first and last node.
struct SampledLipschitz {
  std::vector<Point> nodes;
  double lipschitz;
};

enum class ConstraintMode {
  Standard,  ///< gamma2 >= psi(gamma1)
  Rhomb,     ///< |gamma2| >= psi(gamma1)
};

class Obstacle {
 public:
  using Kind = std::variant<SymmetricCone, SampledLipschitz>;

  /// Validates (A2) psi < 0 on (-inf, 0] and [1, inf) and (A3) max psi > 0.
  explicit Obstacle(Kind kind, ConstraintMode mode = ConstraintMode::Standard);

  /// Cone with apex (1/2, height) and zeros at 0.25 and 0.75.
  static Obstacle cone(double height, ConstraintMode mode = ConstraintMode::Standard);
  static Obstacle cone(double height, double slope,
                       ConstraintMode mode = ConstraintMode::Standard);

  double value(double x) const;
  /// A subgradient of psi; right derivative at kinks.
  double derivative(double x) const;

  /// psi(1/2) for a cone; max over [0, 1] otherwise.
  double peak_height() const;

  const Kind& kind() const noexcept { return kind_; }
  ConstraintMode mode() const noexcept { return mode_; }
  Obstacle with_mode(ConstraintMode mode) const { return Obstacle(kind_, mode); }
  bool is_cone() const noexcept { return std::holds_alternative<SymmetricCone>(kind_); }

  /// Constraint slack of a point: y - psi(x), or |y| - psi(x) in rhomb mode.
  double slack(Point p) const;

 private:
  Kind kind_;
  ConstraintMode mode_;
};

std::string to_string(ConstraintMode mode);

}  // namespace elastica
