#include "elastica/lbfgs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace elastica {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

struct Pair {
  std::vector<double> s;
  std::vector<double> y;
  double rho;
};

// Two-loop recursion: returns -H g.
std::vector<double> direction(const std::deque<Pair>& hist, std::span<const double> g) {
  std::vector<double> q(g.begin(), g.end());
  std::vector<double> a(hist.size());
  for (std::size_t k = hist.size(); k-- > 0;) {
    a[k] = hist[k].rho * dot(hist[k].s, q);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] -= a[k] * hist[k].y[i];
  }
  if (!hist.empty()) {
    const auto& last = hist.back();
    const double gamma = dot(last.s, last.y) / dot(last.y, last.y);
    for (double& v : q) v *= gamma;
  }
  for (std::size_t k = 0; k < hist.size(); ++k) {
    const double b = hist[k].rho * dot(hist[k].y, q);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += (a[k] - b) * hist[k].s[i];
  }
  for (double& v : q) v = -v;
  return q;
}

}  // namespace

LbfgsResult minimize_lbfgs(const Objective& f, std::vector<double> x0,
                           const LbfgsOptions& opt) {
  const std::size_t n = x0.size();
  LbfgsResult res;
  res.x = std::move(x0);
  std::vector<double> g(n), g_new(n), x_new(n);
  res.value = f(res.x, g);
  if (!std::isfinite(res.value))
    throw std::invalid_argument("minimize_lbfgs: objective not finite at the start point");

  std::deque<Pair> hist;
  for (res.iterations = 0; res.iterations < opt.max_iterations; ++res.iterations) {
    if (max_abs(g) <= opt.gradient_tol) {
      res.converged = true;
      res.stop_reason = "gradient tolerance";
      break;
    }
    auto d = direction(hist, g);
    double slope = dot(d, g);
    if (!(slope < 0.0)) {
      hist.clear();
      d.assign(g.begin(), g.end());
      for (double& v : d) v = -v;
      slope = dot(d, g);
    }
    double step = 1.0;
    if (hist.empty()) step = std::min(1.0, 1.0 / std::sqrt(dot(g, g)));

    bool accepted = false;
    double f_new = 0.0;
    for (int bt = 0; bt < opt.max_backtracks; ++bt) {
      for (std::size_t i = 0; i < n; ++i) x_new[i] = res.x[i] + step * d[i];
      f_new = f(x_new, g_new);
      if (std::isfinite(f_new) && f_new <= res.value + opt.armijo * step * slope &&
          f_new < res.value) {
        accepted = true;
        break;
      }
      // Predicted decrease below the rounding level of f: accept a step that
      // does not increase f and shrinks the gradient.
      if (std::isfinite(f_new) && -step * slope <= 1e-13 * std::abs(res.value) &&
          f_new <= res.value && dot(g_new, g_new) < dot(g, g)) {
        accepted = true;
        break;
      }
      step *= opt.shrink;
    }
    if (!accepted) {
      if (!hist.empty()) {
        hist.clear();  // retry once along steepest descent
        continue;
      }
      res.stop_reason = "line search failed";
      break;
    }

    Pair p{std::vector<double>(n), std::vector<double>(n), 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      p.s[i] = x_new[i] - res.x[i];
      p.y[i] = g_new[i] - g[i];
    }
    const double sy = dot(p.s, p.y);
    if (sy > 1e-300 * std::max(1.0, dot(p.y, p.y))) {
      p.rho = 1.0 / sy;
      hist.push_back(std::move(p));
      if (static_cast<int>(hist.size()) > opt.memory) hist.pop_front();
    }
    res.x.swap(x_new);
    g.swap(g_new);
    res.value = f_new;
  }
  if (res.stop_reason.empty()) res.stop_reason = "iteration limit";
  res.gradient_norm = std::sqrt(dot(g, g));
  res.gradient_max = max_abs(g);
  return res;
}

}  // namespace elastica
