#include "elastica/zoo.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "elastica/elliptic.hpp"
#include "elastica/moduli.hpp"

namespace elastica::zoo {
namespace {

using elliptic::complete_KE;
using elliptic::incomplete_E;
using elliptic::jacobi;

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void require_arclength(const ElasticaSpec& spec, double s, const char* fn) {
  const double slack = 1e-12 * (1.0 + spec.length);
  if (!(s >= -slack && s <= spec.length + slack))
    throw std::out_of_range(std::string(fn) + ": arclength " + std::to_string(s) +
                            " outside [0, " + std::to_string(spec.length) + "]");
}

bool is_loop(const ElasticaSpec& spec) { return spec.family == Family::Loop; }

double reflect(const ElasticaSpec& spec, double v) { return spec.reflected ? -v : v; }

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Sarc: return "sarc";
    case Family::Larc: return "larc";
    case Family::Loop: return "loop";
    case Family::Leaf: return "leaf";
    case Family::Rect: return "rect";
    case Family::Segment: return "segment";
  }
  return "?";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::Sarc, Family::Larc, Family::Loop, Family::Leaf, Family::Rect,
                   Family::Segment})
    if (to_string(f) == name) return f;
  throw AdmissibilityError("unknown family '" + std::string(name) + "'");
}

ElasticaSpec make_pinned_elastica(Family family, double lambda, int n, bool reflected) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw AdmissibilityError("pinned elastica: lambda must be positive");
  if (n < 1) throw AdmissibilityError("pinned elastica: n must be at least 1");

  moduli::Branch branch;
  switch (family) {
    case Family::Sarc: branch = moduli::Branch::Branch1; break;
    case Family::Larc: branch = moduli::Branch::Branch2; break;
    case Family::Loop: branch = moduli::Branch::Branch3; break;
    default: throw AdmissibilityError("pinned elastica: family must be sarc, larc or loop");
  }
  if (family != Family::Loop && n < moduli::n_lambda(lambda))
    throw AdmissibilityError("pinned elastica: n = " + std::to_string(n) +
                             " below n_lambda = " + std::to_string(moduli::n_lambda(lambda)) +
                             " for lambda = " + std::to_string(lambda));

  const double c = lambda / (static_cast<double>(n) * n);
  const double q = moduli::invert_g(c, branch);
  const auto [K, E] = complete_KE(q);
  const double alpha = family == Family::Loop ? 2.0 * n * (K - 2.0 * E) : 2.0 * n * (2.0 * E - K);
  return {family, lambda, n, q, alpha, 2.0 * n * K / alpha, reflected};
}

ElasticaSpec make_leaf(double lambda, int n, bool reflected) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw AdmissibilityError("leaf: lambda must be positive");
  if (n < 1) throw AdmissibilityError("leaf: n must be at least 1");
  const double q = moduli::thresholds().q_star;
  const double alpha = std::sqrt(lambda / (2.0 * (2.0 * q * q - 1.0)));
  const double K = elliptic::complete_K(q);
  return {Family::Leaf, lambda, n, q, alpha, 2.0 * n * K / alpha, reflected};
}

ElasticaSpec make_rect(bool reflected) {
  const double alpha = moduli::alpha_rect();
  const double K = elliptic::complete_K(kInvSqrt2);
  return {Family::Rect, 0.0, 1, kInvSqrt2, alpha, 2.0 * K / alpha, reflected};
}

ElasticaSpec make_segment(double lambda) {
  if (!(lambda >= 0.0)) throw AdmissibilityError("segment: lambda must be nonnegative");
  return {Family::Segment, lambda, 1, 0.0, 1.0, 1.0, false};
}

ElasticaSpec make_spec(Family family, double lambda, int n, bool reflected) {
  switch (family) {
    case Family::Leaf: return make_leaf(lambda, n, reflected);
    case Family::Rect: return make_rect(reflected);
    case Family::Segment: return make_segment(lambda);
    default: return make_pinned_elastica(family, lambda, n, reflected);
  }
}

Point sample(const ElasticaSpec& spec, double s) {
  require_arclength(spec, s, "sample");
  if (spec.family == Family::Segment) return {s, 0.0};
  const double q = spec.q;
  const double a = spec.alpha;
  const double u = a * s - elliptic::complete_K(q);
  const auto j = jacobi(u, q);
  const double E = elliptic::complete_E(q);
  const double e_am = incomplete_E(j.am, q);
  double x = (2.0 * e_am + 2.0 * E - a * s) / a;
  if (is_loop(spec)) x = -x;
  const double y = 2.0 * q * j.cn / a;
  return {x, reflect(spec, y)};
}

double tangent_angle(const ElasticaSpec& spec, double s) {
  require_arclength(spec, s, "tangent_angle");
  if (spec.family == Family::Segment) return 0.0;
  const double u = spec.alpha * s - elliptic::complete_K(spec.q);
  const double a = std::asin(spec.q * jacobi(u, spec.q).sn);
  const double theta = is_loop(spec) ? std::numbers::pi + 2.0 * a : -2.0 * a;
  return reflect(spec, theta);
}

double signed_curvature(const ElasticaSpec& spec, double s) {
  require_arclength(spec, s, "signed_curvature");
  if (spec.family == Family::Segment) return 0.0;
  const double u = spec.alpha * s - elliptic::complete_K(spec.q);
  const double k = 2.0 * spec.alpha * spec.q * jacobi(u, spec.q).cn;
  return reflect(spec, is_loop(spec) ? k : -k);
}

double curvature_derivative(const ElasticaSpec& spec, double s) {
  require_arclength(spec, s, "curvature_derivative");
  if (spec.family == Family::Segment) return 0.0;
  const double u = spec.alpha * s - elliptic::complete_K(spec.q);
  const auto j = jacobi(u, spec.q);
  const double dk = 2.0 * spec.alpha * spec.alpha * spec.q * j.sn * j.dn;
  return reflect(spec, is_loop(spec) ? -dk : dk);
}

ClosedFormEnergy closed_form_energy(const ElasticaSpec& spec) {
  if (spec.family == Family::Segment) return {0.0, 1.0, spec.lambda};
  const auto [K, E] = complete_KE(spec.q);
  const double B = 8.0 * spec.n * spec.alpha * (E - (1.0 - spec.q * spec.q) * K);
  const double L = spec.length;
  return {B, L, B + spec.lambda * L};
}

DiscreteCurve export_curve(const ElasticaSpec& spec, std::size_t segments) {
  if (segments < DiscreteCurve::kMinSegments)
    throw CurveError("export_curve: too few segments");
  const double h = spec.length / static_cast<double>(segments);
  std::vector<double> angles(segments);
  for (std::size_t i = 0; i < segments; ++i)
    angles[i] = tangent_angle(spec, (static_cast<double>(i) + 0.5) * h);
  return DiscreteCurve(spec.length, std::move(angles));
}

double polar_tangential_angle_rect(double s) {
  static const ElasticaSpec rect = make_rect();
  if (!(s > 0.0 && s < rect.length))
    throw elliptic::DomainError("polar_tangential_angle_rect: s must lie in (0, L_rect)");
  const Point p = sample(rect, s);
  const double th = tangent_angle(rect, s);
  const Point t{std::cos(th), std::sin(th)};
  return std::atan2(cross(p, t), dot(p, t));
}

}  // namespace elastica::zoo
