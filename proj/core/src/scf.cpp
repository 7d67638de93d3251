#include <algorithm>
#include <cmath>
#include <numbers>

#include "elastica/elliptic.hpp"
#include "elastica/moduli.hpp"
#include "elastica/zoo.hpp"

namespace elastica::zoo {
namespace {

const ElasticaSpec& rect() {
  static const ElasticaSpec spec = make_rect();
  return spec;
}

// d/ds k_rect at s = sqrt2 alpha0^2 sn dn evaluated at u = alpha0 s - K.
double rect_curvature_slope(double s) {
  const auto& r = rect();
  const double u = r.alpha * s - elliptic::complete_K(r.q);
  const auto j = elliptic::jacobi(u, r.q);
  return std::numbers::sqrt2 * r.alpha * r.alpha * j.sn * j.dn;
}

double half_point_check(const ScfSpec& scf, double s) {
  const double L = 2.0 * scf.half_length;
  if (!(s >= -1e-12 * L && s <= L * (1.0 + 1e-12)))
    throw std::out_of_range("scf: arclength outside [0, L]");
  return std::clamp(s, 0.0, L);
}

}  // namespace

ScfSpec make_scf(double tip_height) {
  if (!(tip_height > 0.0) || !std::isfinite(tip_height))
    throw elliptic::DomainError("make_scf: tip height must be positive");
  const auto& r = rect();
  const double target = std::atan(2.0 * tip_height);

  // -omega_rect increases from 0 past pi/2 and stays above pi/2 afterwards.
  double lo = 0.0;
  double hi = r.length;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * r.length; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (-polar_tangential_angle_rect(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  const double ell = 0.5 * (lo + hi);
  const double phi = -tangent_angle(r, ell);
  const Point p = rotate(sample(r, ell), phi);
  const double alpha = 2.0 * p.x;
  return {ell, alpha, phi, ell / alpha, tip_height};
}

Point scf_sample(const ScfSpec& scf, double s) {
  s = half_point_check(scf, s);
  const double L = 2.0 * scf.half_length;
  if (s > scf.half_length) {
    const Point m = scf_sample(scf, L - s);
    return {1.0 - m.x, m.y};
  }
  const double sr = std::min(scf.alpha * s, rect().length);
  return (1.0 / scf.alpha) * rotate(sample(rect(), sr), scf.phi);
}

double scf_tangent_angle(const ScfSpec& scf, double s) {
  s = half_point_check(scf, s);
  const double L = 2.0 * scf.half_length;
  if (s > scf.half_length) return -scf_tangent_angle(scf, L - s);
  return tangent_angle(rect(), std::min(scf.alpha * s, rect().length)) + scf.phi;
}

double scf_curvature(const ScfSpec& scf, double s) {
  s = half_point_check(scf, s);
  const double L = 2.0 * scf.half_length;
  if (s > scf.half_length) s = L - s;
  return scf.alpha * signed_curvature(rect(), std::min(scf.alpha * s, rect().length));
}

double scf_tip_curvature_slope(const ScfSpec& scf) {
  return scf.alpha * scf.alpha * rect_curvature_slope(scf.ell);
}

double scf_normalized_tip_slope(const ScfSpec& scf) { return rect_curvature_slope(scf.ell); }

double scf_bending(const ScfSpec& scf) {
  // k_rect^2 = 2 alpha0^2 cn^2(u) and, for q^2 = 1/2, int cn^2 du = 2 E(am u) - u.
  const auto& r = rect();
  const double K = elliptic::complete_K(r.q);
  const double E = elliptic::complete_E(r.q);
  const double u = r.alpha * scf.ell - K;
  const double cn2 = 2.0 * elliptic::incomplete_E(elliptic::jacobi_am(u, r.q), r.q) - u +
                     2.0 * E - K;
  return 2.0 * scf.alpha * 2.0 * r.alpha * cn2;
}

DiscreteCurve scf_export(const ScfSpec& scf, std::size_t segments) {
  if (segments % 2 != 0 || segments < DiscreteCurve::kMinSegments)
    throw CurveError("scf_export: segment count must be even and at least 8");
  const std::size_t half = segments / 2;
  const double h = scf.half_length / static_cast<double>(half);
  std::vector<double> angles(half);
  for (std::size_t i = 0; i < half; ++i)
    angles[i] = scf_tangent_angle(scf, (static_cast<double>(i) + 0.5) * h);
  return mirror_half(angles, scf.half_length);
}

}  // namespace elastica::zoo
