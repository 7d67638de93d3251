#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace elastica {

/// Objective callback: returns f(x) and writes the gradient into `grad`.
/// Returning +inf marks x as outside the domain; the line search backs off.
using Objective = std::function<double(std::span<const double> x, std::span<double> grad)>;

struct LbfgsOptions {
  int max_iterations = 5000;
  double gradient_tol = 1e-8;  ///< stop when max |grad_i| <= gradient_tol
  int memory = 12;
  double armijo = 1e-4;
  double shrink = 0.5;
  int max_backtracks = 60;
};

struct LbfgsResult {
  std::vector<double> x;
  double value = 0.0;
  double gradient_norm = 0.0;  ///< Euclidean norm at x
  double gradient_max = 0.0;   ///< max-norm at x
  int iterations = 0;
  bool converged = false;      ///< gradient tolerance reached
  std::string stop_reason;
};

/// Limited-memory BFGS directions with Armijo backtracking. Every accepted
/// step strictly decreases f.
LbfgsResult minimize_lbfgs(const Objective& f, std::vector<double> x0,
                           const LbfgsOptions& options = {});

}  // namespace elastica
