#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "elastica/point.hpp"

namespace elastica {

/// Invalid curve data (too few segments, non-finite values, bad length).
class CurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Angle-parametrized polyline: N segments of equal length L/N, segment i
/// pointing in direction (cos theta_i, sin theta_i). Unit speed holds by
/// construction.
class DiscreteCurve {
 public:
  static constexpr std::size_t kMinSegments = 8;

  DiscreteCurve(double total_length, std::vector<double> angles, Point base = {});

  double total_length() const noexcept { return length_; }
  std::size_t segments() const noexcept { return angles_.size(); }
  double segment_length() const noexcept { return length_ / static_cast<double>(angles_.size()); }
  std::span<const double> angles() const noexcept { return angles_; }
  Point base_point() const noexcept { return base_; }

  /// N+1 node positions; the first is the base point.
  std::vector<Point> positions() const;
  Point end_point() const;

  /// Arclength of node i.
  double node_arclength(std::size_t i) const noexcept {
    return segment_length() * static_cast<double>(i);
  }

  /// Same angles, length scaled by r (base point scaled too).
  DiscreteCurve scaled(double r) const;

 private:
  double length_;
  std::vector<double> angles_;
  Point base_;
};

/// Free function form of DiscreteCurve::positions.
std::vector<Point> positions(const DiscreteCurve& c);

/// Reflectionally symmetric curve from its first half: angles
/// [t_1..t_M, -t_M..-t_1] and total length 2*half_length. If the half ends at
/// x = 1/2 the full curve satisfies gamma(1-x) = (1 - gamma1(x), gamma2(x)).
DiscreteCurve mirror_half(std::span<const double> half_angles, double half_length,
                          Point base = {});

/// Discrete signed curvature at interior nodes 1..N-1 (index 0 and N are 0).
std::vector<double> node_curvatures(const DiscreteCurve& c);

/// Tangent angle at each node: the adjacent segment angle at the ends and the
/// mean of the two adjacent segment angles inside.
std::vector<double> node_tangent_angles(const DiscreteCurve& c);

/// Bending energy of an arbitrary polyline: sum over interior vertices of
/// turning_angle^2 / (mean adjacent edge length). Equals the DiscreteCurve
/// bending energy for equal edge lengths.
double polyline_bending(std::span<const Point> points);

}  // namespace elastica
