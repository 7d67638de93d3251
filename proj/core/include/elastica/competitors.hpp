#pragma once

// Explicit comparison curves: the escaping two-arc curve that touches a cone
// with energy O(sqrt(lambda)), the half-leaf / segment / half-leaf curve, and
// the wide circular arc used for the lambda = 0 nonexistence argument.

#include <stdexcept>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/obstacle.hpp"

namespace elastica::zoo {

class ConstructionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct EscapingCompetitor {
  DiscreteCurve curve;         ///< equal-segment export, mirrored halves
  std::vector<Point> nodes;    ///< exact curve points at the export's node arclengths
  double outer_radius;         ///< R = lambda^{-1/2}
  double inner_radius;         ///< radius of the quarter arc ending at x = 1/2
  Point center;                ///< center (X, Y) of the outer circle
  Point tangency;              ///< touching point on the left leg
  double bending;              ///< exact B
  double length;               ///< exact L
  double energy;               ///< exact B + lambda L
};

/// Two circular arcs per half: a clockwise arc of radius lambda^{-1/2}
/// through the origin and tangent to the cone's left leg, ending with a
/// vertical tangent, then a clockwise quarter arc ending horizontally at
/// x = 1/2. Throws ConstructionError when the tangency is not real or the
/// result is not admissible.
EscapingCompetitor escaping_competitor(const Obstacle& cone, double lambda,
                                       std::size_t segments = 1024);

struct LeafSegmentCompetitor {
  DiscreteCurve curve;
  std::vector<Point> nodes;
  double alpha;
  double bending;          ///< 8 alpha (E* - (1 - q*^2) K*)
  double length;           ///< 2 K* / alpha + 1
  double energy;           ///< bending + lambda * length
  double energy_integral;  ///< same energy via the xi-integral representation
};

/// Half figure-eight, horizontal unit segment at height 2 q* / alpha, second
/// half figure-eight; alpha from lambda = 2 alpha^2 (2 q_n^2 - 1).
LeafSegmentCompetitor leaf_segment_competitor(double lambda, double q_n,
                                              std::size_t segments = 1024);

/// Exact point of the leaf-segment curve at arclength s.
Point leaf_segment_sample(double alpha, double s);

struct WideArc {
  DiscreteCurve curve;
  double radius;
  double bending;  ///< sweep / radius, at most 2 pi / radius
};

/// Major arc of the circle of the given radius through (0,0) and (1,0),
/// passing above the unit interval.
WideArc wide_arc_competitor(double radius, std::size_t segments = 1024);

}  // namespace elastica::zoo
