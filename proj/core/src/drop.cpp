#include "elastica/drop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "elastica/energy.hpp"
#include "elastica/zoo.hpp"

namespace elastica {
namespace {

constexpr double kPi = std::numbers::pi;

double bending_sum(std::span<const double> th) {
  double sum = 0.0;
  for (std::size_t i = 1; i < th.size(); ++i) sum += (th[i] - th[i - 1]) * (th[i] - th[i - 1]);
  return sum;
}

}  // namespace

double drop_objective(std::span<const double> th, double lambda, double weight,
                      std::span<double> grad) {
  const std::size_t n = th.size();
  const double nd = static_cast<double>(n);
  const double b = nd * bending_sum(th);
  double mc = 0.0;
  double ms = 0.0;
  for (double a : th) {
    mc += std::cos(a);
    ms += std::sin(a);
  }
  mc /= nd;
  ms /= nd;
  const double root = std::sqrt(lambda * b);
  const double f = 2.0 * root + weight * (mc * mc + ms * ms);

  std::fill(grad.begin(), grad.end(), 0.0);
  // d(2 sqrt(lambda b)) = lambda / sqrt(lambda b) db; b = 0 is a kink.
  const double coef = root > 0.0 ? lambda / root : 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double d = 2.0 * nd * (th[i] - th[i - 1]) * coef;
    grad[i] += d;
    grad[i - 1] -= d;
  }
  for (std::size_t i = 0; i < n; ++i)
    grad[i] += 2.0 * weight * (mc * -std::sin(th[i]) + ms * std::cos(th[i])) / nd;
  return f;
}

DiscreteCurve minimize_drop(std::vector<double> angles, double lambda, const DropOptions& opt) {
  double w = opt.start_weight;
  for (int r = 0; r < opt.rounds; ++r, w *= opt.factor) {
    const Objective obj = [lambda, w](std::span<const double> x, std::span<double> g) {
      return drop_objective(x, lambda, w, g);
    };
    angles = minimize_lbfgs(obj, std::move(angles), opt.inner).x;
  }
  const double b = static_cast<double>(angles.size()) * bending_sum(angles);
  const double length = b > 0.0 ? std::sqrt(b / lambda) : 1.0;
  return DiscreteCurve(length, std::move(angles));
}

DropReport drop_minimality_check(double lambda, int trials, const DropOptions& opt) {
  if (!(lambda > 0.0)) throw std::domain_error("drop_minimality_check: lambda must be positive");
  if (trials < 1) throw std::invalid_argument("drop_minimality_check: need at least one trial");
  const std::size_t n = opt.segments;
  DropReport rep;
  rep.leaf_energy = zoo::closed_form_energy(zoo::make_leaf(lambda, 1)).total;
  rep.min_energy = std::numeric_limits<double>::infinity();

  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(opt.seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(t) + 1);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<int> turns(0, 3);
    // Perturbed m-fold circles (m = 0..3), alternating orientation.
    const int m = turns(rng);
    const double sign = t % 2 == 0 ? 1.0 : -1.0;
    std::vector<double> coef(6);
    for (std::size_t j = 0; j < coef.size(); ++j) coef[j] = 1.5 * gauss(rng) / static_cast<double>(j + 1);
    std::vector<double> th(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double z = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
      double d = 0.0;
      for (std::size_t j = 0; j < coef.size(); ++j)
        d += coef[j] * std::sin(static_cast<double>(j + 1) * kPi * z);
      th[i] = sign * 2.0 * kPi * m * z + d;
    }
    const auto c = minimize_drop(std::move(th), lambda, opt);
    const auto e = discrete_energy(c, lambda);
    const auto pts = c.positions();
    rep.trials.push_back({e.total, norm(pts.back() - pts.front())});
    rep.min_energy = std::min(rep.min_energy, e.total);
  }
  rep.passed = rep.min_energy >= rep.leaf_energy * (1.0 - opt.relative_tol);
  return rep;
}

}  // namespace elastica
