#include "elastica/moduli.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "elastica/elliptic.hpp"

namespace elastica::moduli {
namespace {

using elliptic::complete_KE;
using elliptic::DomainError;

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
constexpr int kMaxIterations = 200;
constexpr double kRootTol = 1e-12;
constexpr double kBoundaryTol = 1e-12;

void require_range(double q, bool open_left, const char* fn) {
  const bool left_ok = open_left ? q > kInvSqrt2 : q >= kInvSqrt2 - 1e-15;
  if (!(left_ok && q < 1.0))
    throw DomainError(std::string(fn) + ": q outside " +
                      (open_left ? "(1/sqrt2, 1)" : "[1/sqrt2, 1)") + ", got " +
                      std::to_string(q));
}

double df_dq(double q) {
  const auto [K, E] = complete_KE(q);
  const double q2 = q * q;
  const double a = 4 * q2 * q2 - 5 * q2 + 1;
  const double b = -8 * q2 * q2 + 8 * q2 - 1;
  const double da = 16 * q2 * q - 10 * q;
  const double db = -32 * q2 * q + 16 * q;
  return da * K + a * elliptic::dK_dq(q) + db * E + b * elliptic::dE_dq(q);
}

double dQ_dq(double q) { return 2.0 * elliptic::dE_dq(q) - elliptic::dK_dq(q); }

// Bisection down to a narrow bracket, then bracket-safeguarded Newton.
// `fn` must change sign on [lo, hi].
double bracketed_root(const std::function<double(double)>& fn,
                      const std::function<double(double)>& dfn, double lo,
                      double hi, const char* what) {
  double f_lo = fn(lo);
  const double f_hi = fn(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0))
    throw ConvergenceError(std::string(what) + ": bracket does not change sign");

  int iter = 0;
  for (; iter < kMaxIterations && hi - lo > 1e-6; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = fn(mid);
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  double prev_step = hi - lo;
  for (; iter < kMaxIterations; ++iter) {
    const double fx = fn(x);
    if (fx == 0.0) return x;
    if ((fx > 0.0) == (f_lo > 0.0))
      lo = x;
    else
      hi = x;
    const double d = dfn(x);
    double next = (d != 0.0 && std::isfinite(d)) ? x - fx / d : 0.5 * (lo + hi);
    if (!(next >= lo && next <= hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    // Quadratic convergence: a step this small leaves an error far below kRootTol.
    if (step <= 1e-2 * kRootTol || hi - lo <= 1e-2 * kRootTol) return x;
    // Steps that stop shrinking near the root are rounding noise in fn.
    if (step >= prev_step && step <= kRootTol) return x;
    prev_step = step;
  }
  throw ConvergenceError(std::string(what) + ": no convergence within " +
                         std::to_string(kMaxIterations) + " iterations");
}

}  // namespace

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Branch1: return "Branch1";
    case Branch::Branch2: return "Branch2";
    case Branch::Branch3: return "Branch3";
  }
  return "?";
}

double f_of(double q) {
  require_range(q, false, "f_of");
  const auto [K, E] = complete_KE(q);
  const double q2 = q * q;
  return (4 * q2 * q2 - 5 * q2 + 1) * K + (-8 * q2 * q2 + 8 * q2 - 1) * E;
}

double two_E_minus_K(double q) {
  const auto [K, E] = complete_KE(q);
  return 2.0 * E - K;
}

double g_of(double q) {
  require_range(q, false, "g_of");
  const double Q = two_E_minus_K(q);
  return 8.0 * Q * Q * std::max(0.0, 2.0 * q * q - 1.0);
}

double dg_dq(double q) {
  require_range(q, true, "dg_dq");
  const double Q = two_E_minus_K(q);
  return 8.0 * (2.0 * Q * dQ_dq(q) * (2.0 * q * q - 1.0) + 4.0 * q * Q * Q);
}

double h_of(double q) {
  require_range(q, true, "h_of");
  const auto [K, E] = complete_KE(q);
  return ((4 * q * q - 3) * K + 2 * E) / std::sqrt(2 * q * q - 1);
}

double dh_dq(double q) {
  require_range(q, true, "dh_dq");
  const double s = 2 * q * q - 1;
  return -f_of(q) / (s * std::sqrt(s) * q * (1 - q * q));
}

double alpha_rect() {
  const auto [K, E] = complete_KE(kInvSqrt2);
  return 4.0 * E - 2.0 * K;
}

Thresholds solve_thresholds() {
  Thresholds t{};
  t.q_star = bracketed_root(two_E_minus_K, dQ_dq, 0.85, 0.95, "q_star");
  t.q_hat = bracketed_root(f_of, df_dq, 0.75, 0.85, "q_hat");
  t.lambda_hat = g_of(t.q_hat);
  t.h_star = std::numbers::sqrt2 / alpha_rect();
  return t;
}

const Thresholds& thresholds() {
  static const Thresholds cached = solve_thresholds();
  return cached;
}

double invert_g(double c, Branch branch) {
  if (!(c > 0.0) || !std::isfinite(c))
    throw NoSolutionError("invert_g: level must be positive and finite, got " +
                          std::to_string(c));
  const Thresholds& t = thresholds();
  auto residual = [c](double q) { return g_of(q) - c; };

  switch (branch) {
    case Branch::Branch1:
    case Branch::Branch2: {
      if (std::abs(c - t.lambda_hat) <= kBoundaryTol) return t.q_hat;
      if (c > t.lambda_hat)
        throw NoSolutionError("invert_g: level " + std::to_string(c) +
                              " exceeds lambda_hat on " + std::string(to_string(branch)));
      if (branch == Branch::Branch1)
        return bracketed_root(residual, dg_dq, kInvSqrt2, t.q_hat, "invert_g/Branch1");
      return bracketed_root(residual, dg_dq, t.q_hat, t.q_star, "invert_g/Branch2");
    }
    case Branch::Branch3: {
      double gap = 1.0 - t.q_star;
      double hi = t.q_star;
      for (int k = 0; k < 60; ++k) {
        gap *= 0.5;
        hi = 1.0 - gap;
        if (g_of(hi) > c) break;
      }
      if (!(g_of(hi) > c))
        throw ConvergenceError("invert_g/Branch3: level too large to bracket");
      return bracketed_root(residual, dg_dq, t.q_star, hi, "invert_g/Branch3");
    }
  }
  throw NoSolutionError("invert_g: unknown branch");
}

int n_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw DomainError("n_lambda: lambda must be positive, got " + std::to_string(lambda));
  const double ratio = std::sqrt(lambda / thresholds().lambda_hat);
  return std::max(1, static_cast<int>(std::ceil(ratio - 1e-12)));
}

double h_lambda(double lambda) {
  if (!(lambda > 0.0))
    throw DomainError("h_lambda: lambda must be positive, got " + std::to_string(lambda));
  if (lambda > thresholds().lambda_hat + kBoundaryTol)
    throw DomainError("h_lambda: lambda exceeds lambda_hat, Branch2 is empty");
  const double q2 = invert_g(lambda, Branch::Branch2);
  return q2 / two_E_minus_K(q2);
}

}  // namespace elastica::moduli
