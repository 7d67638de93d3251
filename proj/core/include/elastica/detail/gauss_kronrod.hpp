#pragma once

#include <array>
#include <cmath>

namespace elastica::elliptic {
namespace detail {

// 15-point Kronrod nodes on [0, 1] (symmetric), with the embedded 7-point
// Gauss rule on the odd-indexed nodes.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkEstimate {
  double value;
  double error;
};

template <class Fn>
GkEstimate gauss_kronrod_15(Fn& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * sum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

template <class Fn>
double adaptive_gk(Fn& f, double a, double b, double tol, int depth,
                   const GkEstimate& whole) {
  if (depth <= 0 || whole.error <= tol) return whole.value;
  const double mid = 0.5 * (a + b);
  const GkEstimate left = gauss_kronrod_15(f, a, mid);
  const GkEstimate right = gauss_kronrod_15(f, mid, b);
  // Converged once the refined pair agrees with the parent estimate.
  if (std::abs(left.value + right.value - whole.value) <= tol &&
      left.error + right.error <= tol)
    return left.value + right.value;
  return adaptive_gk(f, a, mid, 0.5 * tol, depth - 1, left) +
         adaptive_gk(f, mid, b, 0.5 * tol, depth - 1, right);
}

}  // namespace detail

template <class Fn>
double integrate(Fn&& f, double a, double b, double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  const detail::GkEstimate whole = detail::gauss_kronrod_15(f, a, b);
  return detail::adaptive_gk(f, a, b, abs_tol, max_depth, whole);
}

}  // namespace elastica::elliptic
