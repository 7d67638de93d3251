#pragma once

// Coincidence set, the discrete variational-inequality pairing for vertical
// perturbations, and related diagnostics.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/obstacle.hpp"

namespace elastica {

struct CoincidenceSummary {
  bool touching = false;
  std::vector<std::size_t> touch_nodes;  ///< nodes with slack <= touch_tol
  double min_gap = 0.0;                  ///< min over nodes of the slack
  std::size_t min_gap_node = 0;
  double touch_tol = 0.0;
};

/// Default touching tolerance: 1e-3 times the obstacle's peak height.
double default_touch_tolerance(const Obstacle& obstacle);

/// Slack y_i - psi(x_i) (|y_i| in rhomb mode) at every node, summarised.
/// A negative touch_tol selects default_touch_tolerance.
CoincidenceSummary constraint_slack(const DiscreteCurve& c, const Obstacle& obstacle,
                                    double touch_tol = -1.0);
CoincidenceSummary constraint_slack(std::span<const Point> nodes, const Obstacle& obstacle,
                                    double touch_tol = -1.0);

/// Nonnegative test function sampled on the N + 1 nodes of a curve.
enum class BumpShape { Hat, Smooth };

/// Bump centred at arclength `center` with half-width `width`, peak 1.
/// Zero at the first and last node.
std::vector<double> bump(const DiscreteCurve& c, double center, double width,
                         BumpShape shape = BumpShape::Smooth);

/// Discrete pairing
///   sum_i h [2 k_i <n_i,e2> phi''_i - 3 k_i^2 <t_i,e2> phi'_i - lambda k_i <n_i,e2> phi_i]
/// over interior nodes, with centred differences for phi' and phi''.
/// Throws std::invalid_argument for negative phi or nonzero end values.
double vi_pairing(const DiscreteCurve& c, double lambda, std::span<const double> phi);

/// For each touch node, whether its tangent is within `tol` radians of
/// vertical (true = flagged). Empty for nontouching curves.
struct VerticalityReport {
  std::vector<std::size_t> touch_nodes;
  std::vector<bool> flagged;
  bool passes() const;
};
VerticalityReport nonverticality_check(const DiscreteCurve& c, const Obstacle& obstacle,
                                       double tol = 1e-3, double touch_tol = -1.0);

/// c_psi = min(atan(a) - atan(2 H), atan(2 H)) for a cone of slope a and
/// apex height H.
double c_psi(const Obstacle& cone);

}  // namespace elastica
