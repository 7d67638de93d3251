#include "elastica/competitors.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "elastica/elliptic.hpp"
#include "elastica/moduli.hpp"

namespace elastica::zoo {
namespace {

constexpr double kPi = std::numbers::pi;

void require_even(std::size_t segments, const char* fn) {
  if (segments % 2 != 0 || segments < DiscreteCurve::kMinSegments)
    throw CurveError(std::string(fn) + ": segment count must be even and at least 8");
}

// Half-angle profile sampled at segment midpoints, mirrored into a full curve.
template <class AngleFn>
DiscreteCurve symmetric_export(AngleFn&& angle, double half_length, std::size_t segments) {
  const std::size_t half = segments / 2;
  const double h = half_length / static_cast<double>(half);
  std::vector<double> a(half);
  for (std::size_t i = 0; i < half; ++i) a[i] = angle((static_cast<double>(i) + 0.5) * h);
  return mirror_half(a, half_length);
}

template <class PointFn>
std::vector<Point> symmetric_nodes(PointFn&& point, double half_length, std::size_t segments) {
  const std::size_t half = segments / 2;
  const double h = half_length / static_cast<double>(half);
  std::vector<Point> nodes(segments + 1);
  for (std::size_t i = 0; i <= half; ++i) {
    nodes[i] = point(static_cast<double>(i) * h);
    nodes[segments - i] = {1.0 - nodes[i].x, nodes[i].y};
  }
  return nodes;
}

}  // namespace

EscapingCompetitor escaping_competitor(const Obstacle& cone, double lambda,
                                       std::size_t segments) {
  require_even(segments, "escaping_competitor");
  const auto* c = std::get_if<SymmetricCone>(&cone.kind());
  if (!c) throw ConstructionError("escaping_competitor: obstacle must be a symmetric cone");
  if (!(lambda > 0.0)) throw ConstructionError("escaping_competitor: lambda must be positive");

  const double a = c->slope;
  const double b = cone.value(0.0);
  const double R = 1.0 / std::sqrt(lambda);
  const double S = std::sqrt(a * a + 1.0);
  const double D = -b * b - 2.0 * b * R * S;
  if (D < 0.0)
    throw ConstructionError("escaping_competitor: negative discriminant, lambda too large");
  const double sd = std::sqrt(D);
  const double X = -a / (a * a + 1.0) * (b + R * S) - sd / (a * a + 1.0);
  const double Y = (b + R * S) / (a * a + 1.0) - a * sd / (a * a + 1.0);
  const Point center{X, Y};
  const Point tangency = center + (R / S) * Point{a, -1.0};

  const double beta0 = std::atan2(-Y, -X);
  const double beta_t = std::atan2(tangency.y - Y, tangency.x - X);
  const double sweep1 = beta0 + kPi;
  const double r = 0.5 - (X - R);
  if (!(sweep1 > 0.0) || !(beta_t <= beta0 && beta_t >= -kPi))
    throw ConstructionError("escaping_competitor: tangency point not on the first arc");
  if (!(r > 0.0)) throw ConstructionError("escaping_competitor: inner radius not positive");

  const double l1 = sweep1 * R;
  const double l2 = 0.5 * kPi * r;
  const double half = l1 + l2;
  const Point c2{X - R + r, Y};

  auto angle = [&](double s) {
    if (s <= l1) return beta0 + 1.5 * kPi - s / R;
    return 0.5 * kPi - (s - l1) / r;
  };
  auto point = [&](double s) {
    if (s <= l1) {
      const double beta = beta0 - s / R;
      return center + R * Point{std::cos(beta), std::sin(beta)};
    }
    const double beta = kPi - (s - l1) / r;
    return c2 + r * Point{std::cos(beta), std::sin(beta)};
  };

  EscapingCompetitor out{symmetric_export(angle, half, segments),
                         symmetric_nodes(point, half, segments),
                         R,
                         r,
                         center,
                         tangency,
                         2.0 * (sweep1 / R + 0.5 * kPi / r),
                         2.0 * half,
                         0.0};
  out.energy = out.bending + lambda * out.length;

  const double tol = 1e-9 * (1.0 + R);
  for (const Point& p : out.nodes)
    if (cone.slack(p) < -tol)
      throw ConstructionError("escaping_competitor: curve crosses the obstacle");
  if (Y + r <= c->height)
    throw ConstructionError("escaping_competitor: top of the curve below the cone apex");
  return out;
}

Point leaf_segment_sample(double alpha, double s) {
  const double q = moduli::thresholds().q_star;
  const double K = elliptic::complete_K(q);
  const double lh = K / alpha;
  auto half_leaf = [&](double u) {
    const auto j = elliptic::jacobi(u, q);
    return (1.0 / alpha) * Point{2.0 * elliptic::incomplete_E(j.am, q) - u, 2.0 * q * j.cn};
  };
  if (s <= lh) return half_leaf(alpha * s - K);
  if (s <= lh + 1.0) return {s - lh, 2.0 * q / alpha};
  return half_leaf(alpha * (s - lh - 1.0)) + Point{1.0, 0.0};
}

LeafSegmentCompetitor leaf_segment_competitor(double lambda, double q_n,
                                              std::size_t segments) {
  require_even(segments, "leaf_segment_competitor");
  if (!(q_n > 1.0 / std::numbers::sqrt2) || !(q_n < 1.0))
    throw elliptic::DomainError("leaf_segment_competitor: q_n must lie in (1/sqrt2, 1)");
  if (!(lambda > 0.0)) throw elliptic::DomainError("leaf_segment_competitor: lambda must be positive");

  const double w = 2.0 * q_n * q_n - 1.0;
  const double alpha = std::sqrt(lambda / (2.0 * w));
  const double q = moduli::thresholds().q_star;
  const auto [K, E] = elliptic::complete_KE(q);
  const double lh = K / alpha;
  const double half = lh + 0.5;

  auto angle = [&](double s) {
    if (s >= lh) return 0.0;
    return -2.0 * std::asin(q * elliptic::jacobi(alpha * s - K, q).sn);
  };
  auto point = [&](double s) { return leaf_segment_sample(alpha, s); };

  LeafSegmentCompetitor out{symmetric_export(angle, half, segments),
                            symmetric_nodes(point, half, segments),
                            alpha,
                            8.0 * alpha * (E - (1.0 - q * q) * K),
                            2.0 * lh + 1.0,
                            0.0,
                            0.0};
  out.energy = out.bending + lambda * out.length;
  const double integral = elliptic::integrate(
      [q](double xi) {
        const double s = std::sin(xi);
        const double c = std::cos(xi);
        return 4.0 * q * q * c * c / std::sqrt(1.0 - q * q * s * s);
      },
      -0.5 * kPi, 0.5 * kPi);
  out.energy_integral = alpha * integral + 4.0 * alpha * w * K + 2.0 * alpha * alpha * w;
  return out;
}

WideArc wide_arc_competitor(double radius, std::size_t segments) {
  require_even(segments, "wide_arc_competitor");
  if (!(radius > 0.5)) throw ConstructionError("wide_arc_competitor: radius must exceed 1/2");
  const double c = std::sqrt(radius * radius - 0.25);
  const double beta0 = std::atan2(-c, -0.5);
  const double beta1 = std::atan2(-c, 0.5);
  const double sweep = 2.0 * kPi - (beta1 - beta0);
  const double length = sweep * radius;
  const double h = length / static_cast<double>(segments);
  std::vector<double> angles(segments);
  for (std::size_t i = 0; i < segments; ++i)
    angles[i] = beta0 + 1.5 * kPi - (static_cast<double>(i) + 0.5) * h / radius;
  return {DiscreteCurve(length, std::move(angles)), radius, sweep / radius};
}

}  // namespace elastica::zoo
