#pragma once

// Closed-form elasticae: penalized pinned arcs and loops, the figure-eight,
// the rectangular elastica and the straight segment. Every curve starts at
// the origin and is parametrized by arclength.

#include <stdexcept>
#include <string>
#include <string_view>

#include "elastica/curve.hpp"
#include "elastica/point.hpp"

namespace elastica::zoo {

/// Invalid family parameters (n below n_lambda, lambda out of range, ...).
class AdmissibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Family { Sarc, Larc, Loop, Leaf, Rect, Segment };

std::string_view to_string(Family f);
/// Accepts the lower-case names "sarc", "larc", "loop", "leaf", "rect", "segment".
Family family_from_string(std::string_view name);

struct ElasticaSpec {
  Family family;
  double lambda;
  int n;
  double q;       ///< modulus (0 for the segment)
  double alpha;   ///< scaling; 1 for the segment
  double length;  ///< 2 n K(q) / alpha, or 1 for the segment
  bool reflected = false;  ///< mirrored across the x-axis
};

/// (lambda, 1, n) shorter arc, longer arc or loop.
ElasticaSpec make_pinned_elastica(Family family, double lambda, int n, bool reflected = false);

/// n-fold figure-eight with modulus q_star; lambda > 0.
ElasticaSpec make_leaf(double lambda, int n = 1, bool reflected = false);

/// Rectangular elastica (lambda = 0, q = 1/sqrt2, alpha = alpha_0).
ElasticaSpec make_rect(bool reflected = false);

/// Straight segment from (0,0) to (1,0).
ElasticaSpec make_segment(double lambda);

/// Dispatches on the family; n and lambda are ignored where meaningless.
ElasticaSpec make_spec(Family family, double lambda, int n = 1, bool reflected = false);

/// Point at arclength s in [0, length].
Point sample(const ElasticaSpec& spec, double s);

/// Continuous tangent angle at arclength s.
double tangent_angle(const ElasticaSpec& spec, double s);

/// Signed curvature (counterclockwise positive) at arclength s.
double signed_curvature(const ElasticaSpec& spec, double s);

/// Arclength derivative of the signed curvature.
double curvature_derivative(const ElasticaSpec& spec, double s);

struct ClosedFormEnergy {
  double bending;
  double length;
  double total;
};

/// B = 8 n alpha (E - (1 - q^2) K), L = 2 n K / alpha, E_lambda = B + lambda L.
ClosedFormEnergy closed_form_energy(const ElasticaSpec& spec);

/// N equal segments whose angles are the exact tangent angles at segment
/// midpoints; total length is the exact length.
DiscreteCurve export_curve(const ElasticaSpec& spec, std::size_t segments);

/// Polar tangential angle of gamma_rect: the angle rotating gamma/|gamma|
/// onto the unit tangent. Principal value; lies in (-pi, 0) on (0, L_rect).
double polar_tangential_angle_rect(double s);

// ---------------------------------------------------------------------------
// Symmetric cut-and-glued free elastica

struct ScfSpec {
  double ell;          ///< parameter on gamma_rect where the half is cut
  double alpha;        ///< scaling factor
  double phi;          ///< rotation angle
  double half_length;  ///< ell / alpha
  double tip_height;
};

/// Cuts gamma_rect at ell with tan(-omega_rect(ell)) = 2 tip_height, rotates
/// the cut tangent to e1 and rescales so the cut point lands on
/// (1/2, tip_height).
ScfSpec make_scf(double tip_height);

/// Point at arclength s in [0, 2 * half_length]; the second half is mirrored.
Point scf_sample(const ScfSpec& scf, double s);
double scf_tangent_angle(const ScfSpec& scf, double s);
double scf_curvature(const ScfSpec& scf, double s);

/// One-sided limit k'(L/2 -) of the curvature derivative.
double scf_tip_curvature_slope(const ScfSpec& scf);

/// k'(L/2 -) / alpha^2 = k_rect'(ell), independent of the rescaling.
double scf_normalized_tip_slope(const ScfSpec& scf);

/// Exact bending energy alpha * B[gamma_rect restricted to [0, ell]] * 2.
double scf_bending(const ScfSpec& scf);

/// Equal-segment export (segments must be even; the midpoint is a node).
DiscreteCurve scf_export(const ScfSpec& scf, std::size_t segments);

}  // namespace elastica::zoo
