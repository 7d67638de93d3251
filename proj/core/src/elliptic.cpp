#include "elastica/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace elastica::elliptic {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kIncompleteTol = 1e-13;

void require_modulus(double q, const char* fn) {
  if (!(q >= 0.0 && q < 1.0))
    throw DomainError(std::string(fn) + ": modulus must satisfy 0 <= q < 1, got " +
                      std::to_string(q));
}

void require_open_modulus(double q, const char* fn) {
  if (!(q > 0.0 && q < 1.0))
    throw DomainError(std::string(fn) + ": modulus must satisfy 0 < q < 1, got " +
                      std::to_string(q));
}

// Integrals over [0, r] with |r| <= pi/2; odd in r.
double reduced_F(double r, double q) {
  const double q2 = q * q;
  auto integrand = [q2](double t) {
    const double s = std::sin(t);
    return 1.0 / std::sqrt(1.0 - q2 * s * s);
  };
  return integrate(integrand, 0.0, r, kIncompleteTol);
}

double reduced_E(double r, double q) {
  const double q2 = q * q;
  auto integrand = [q2](double t) {
    const double s = std::sin(t);
    return std::sqrt(1.0 - q2 * s * s);
  };
  return integrate(integrand, 0.0, r, kIncompleteTol);
}

// Splits x = m*pi + r with r in [-pi/2, pi/2].
struct PeriodSplit {
  double periods;
  double remainder;
};

PeriodSplit split_by_pi(double x) {
  const double m = std::nearbyint(x / kPi);
  return {m, x - m * kPi};
}

}  // namespace

Modulus::Modulus(double q) : q_(q) { require_modulus(q, "Modulus"); }

CompletePair complete_KE(double q) {
  require_modulus(q, "complete_KE");
  double a = 1.0;
  double b = std::sqrt((1.0 - q) * (1.0 + q));
  double c = q;
  double weight = 0.5;
  double sum = weight * c * c;
  for (int i = 0; i < 64; ++i) {
    const double a_next = 0.5 * (a + b);
    const double b_next = std::sqrt(a * b);
    c = 0.5 * (a - b);
    weight *= 2.0;
    sum += weight * c * c;
    a = a_next;
    b = b_next;
    if (std::abs(a - b) <= 1e-16 * a) break;
  }
  const double K = kPi / (2.0 * a);
  return {K, K * (1.0 - sum)};
}

double complete_K(double q) { return complete_KE(q).K; }

double complete_E(double q) {
  if (q == 1.0) return 1.0;
  if (!(q >= 0.0 && q <= 1.0))
    throw DomainError("complete_E: modulus must satisfy 0 <= q <= 1, got " +
                      std::to_string(q));
  return complete_KE(q).E;
}

double incomplete_F(double x, double q) {
  require_modulus(q, "incomplete_F");
  if (!std::isfinite(x)) throw DomainError("incomplete_F: amplitude must be finite");
  const auto [m, r] = split_by_pi(x);
  const double base = (m == 0.0) ? 0.0 : 2.0 * m * complete_K(q);
  return base + reduced_F(r, q);
}

double incomplete_E(double x, double q) {
  require_modulus(q, "incomplete_E");
  if (!std::isfinite(x)) throw DomainError("incomplete_E: amplitude must be finite");
  const auto [m, r] = split_by_pi(x);
  const double base = (m == 0.0) ? 0.0 : 2.0 * m * complete_E(q);
  return base + reduced_E(r, q);
}

double jacobi_am(double u, double q) {
  require_modulus(q, "jacobi_am");
  if (!std::isfinite(u)) throw DomainError("jacobi_am: argument must be finite");
  if (q == 0.0) return u;

  const double K = complete_K(q);
  const double m = std::nearbyint(u / (2.0 * K));
  const double rs = u - 2.0 * m * K;  // in [-K, K]
  const double shift = m * kPi;
  const double sign = rs < 0.0 ? -1.0 : 1.0;
  const double r = std::abs(rs);
  if (r == 0.0) return shift;
  if (r >= K) return shift + sign * 0.5 * kPi;

  // F(., q) is strictly increasing on [0, pi/2]; keep a bracket and fall
  // back to bisection whenever Newton leaves it.
  double lo = 0.0;
  double hi = 0.5 * kPi;
  double x = std::clamp(r * (0.5 * kPi) / K, lo, hi);
  const double q2 = q * q;
  for (int iter = 0; iter < 100; ++iter) {
    const double residual = reduced_F(x, q) - r;
    if (residual > 0.0)
      hi = x;
    else
      lo = x;
    const double s = std::sin(x);
    double next = x - residual * std::sqrt(1.0 - q2 * s * s);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    if (step <= 1e-15 * std::max(1.0, std::abs(x)) || hi - lo <= 1e-15) break;
  }
  return shift + sign * x;
}

JacobiTriple jacobi(double u, double q) {
  const double am = jacobi_am(u, q);
  const double sn = std::sin(am);
  const double cn = std::cos(am);
  const double dn = std::sqrt(1.0 - q * q * sn * sn);
  return {am, sn, cn, dn};
}

double jacobi_sn(double u, double q) { return std::sin(jacobi_am(u, q)); }
double jacobi_cn(double u, double q) { return std::cos(jacobi_am(u, q)); }
double jacobi_dn(double u, double q) {
  const double s = jacobi_sn(u, q);
  return std::sqrt(1.0 - q * q * s * s);
}

double dK_dq(double q) {
  require_open_modulus(q, "dK_dq");
  const auto [K, E] = complete_KE(q);
  return E / (q * (1.0 - q * q)) - K / q;
}

double dE_dq(double q) {
  require_open_modulus(q, "dE_dq");
  const auto [K, E] = complete_KE(q);
  return (E - K) / q;
}

}  // namespace elastica::elliptic
