#pragma once

// Scalar functions on modulus space that govern pinned elasticae with length
// penalty, their roots, and the branch inverses of g.

#include <stdexcept>
#include <string_view>

namespace elastica::moduli {

/// Root finding failed to converge inside its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested value has no solution on the requested branch.
class NoSolutionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Monotone pieces of g on [1/sqrt(2), 1).
///   Branch1: (1/sqrt2, q_hat]   g increasing from 0 to lambda_hat
///   Branch2: [q_hat, q_star)    g decreasing from lambda_hat to 0
///   Branch3: (q_star, 1)        g increasing from 0 to infinity
enum class Branch { Branch1, Branch2, Branch3 };

std::string_view to_string(Branch b);

struct Thresholds {
  double q_hat;       ///< unique root of f
  double q_star;      ///< unique zero of 2E - K
  double lambda_hat;  ///< g(q_hat)
  double h_star;      ///< sqrt(2) / alpha_0, the critical cone height
};

/// f(q) = (4q^4 - 5q^2 + 1) K(q) + (-8q^4 + 8q^2 - 1) E(q), q in [1/sqrt2, 1).
double f_of(double q);

/// g(q) = 8 (2E(q) - K(q))^2 (2q^2 - 1), q in [1/sqrt2, 1).
double g_of(double q);
double dg_dq(double q);

/// h(q) = ((4q^2 - 3) K(q) + 2E(q)) / sqrt(2q^2 - 1), q in (1/sqrt2, 1).
double h_of(double q);

/// Closed form h'(q) = -f(q) / ((2q^2 - 1)^{3/2} q (1 - q^2)).
double dh_dq(double q);

/// Q(q) = 2E(q) - K(q); strictly decreasing, Q(0) = pi/2.
double two_E_minus_K(double q);

/// alpha_0 = 4E(1/sqrt2) - 2K(1/sqrt2).
double alpha_rect();

/// Solves all universal constants. Computed once and cached.
const Thresholds& thresholds();

/// Uncached variant; recomputes every root.
Thresholds solve_thresholds();

/// Solution q of g(q) = c on the given branch.
double invert_g(double c, Branch branch);

/// n_lambda = ceil(sqrt(lambda / lambda_hat)).
int n_lambda(double lambda);

/// h_lambda = q2 / (2E(q2) - K(q2)) with q2 = invert_g(lambda, Branch2).
double h_lambda(double lambda);

}  // namespace elastica::moduli
