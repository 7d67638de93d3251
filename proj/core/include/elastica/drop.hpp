#pragma once

// Randomized check that no local minimizer of E_lambda among curves with
// gamma(0) = gamma(1) beats the one-fold figure-eight.

#include <cstdint>
#include <vector>

#include "elastica/curve.hpp"
#include "elastica/lbfgs.hpp"

namespace elastica {

struct DropOptions {
  std::size_t segments = 128;
  double start_weight = 1e2;
  double factor = 10.0;
  int rounds = 6;
  LbfgsOptions inner{};
  double relative_tol = 1e-2;
  std::uint64_t seed = 0;
};

struct DropTrial {
  double energy;       ///< E_lambda of the local minimizer
  double closure_gap;  ///< |gamma(L) - gamma(0)|
};

struct DropReport {
  bool passed = false;
  double leaf_energy = 0.0;  ///< closed-form E_lambda of Leaf(lambda, 1)
  double min_energy = 0.0;
  std::vector<DropTrial> trials;
};

/// Energy of a closed-at-endpoints curve with the length eliminated:
/// for fixed angles E = b / L + lambda L is minimal at L = sqrt(b / lambda),
/// giving 2 sqrt(lambda b) with b = N sum (theta_i - theta_{i-1})^2.
/// Adds weight * |mean(cos theta, sin theta)|^2 for closure.
double drop_objective(std::span<const double> angles, double lambda, double weight,
                      std::span<double> grad);

/// Locally minimizes the drop objective from the given angles through the
/// penalty schedule; returns the minimizing curve (length at its optimum).
DiscreteCurve minimize_drop(std::vector<double> angles, double lambda, const DropOptions& options);

DropReport drop_minimality_check(double lambda, int trials, const DropOptions& options = {});

}  // namespace elastica
