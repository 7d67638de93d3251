#pragma once

// Complete and incomplete elliptic integrals of the first and second kind
// and the Jacobi amplitude / cn / sn / dn functions.
//
// Every function takes the elliptic *modulus* q (not the parameter m = q^2).
// Complete integrals use the arithmetic-geometric mean; incomplete integrals
// reduce the amplitude to [-pi/2, pi/2] and integrate the remainder with
// adaptive Gauss-Kronrod (7/15) quadrature.

#include <stdexcept>

namespace elastica::elliptic {

/// Thrown for a modulus or argument outside the domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Elliptic modulus q with 0 <= q < 1.
class Modulus {
 public:
  explicit Modulus(double q);
  double value() const noexcept { return q_; }
  operator double() const noexcept { return q_; }

 private:
  double q_;
};

/// K(q) = F(pi/2, q). Domain 0 <= q < 1.
double complete_K(double q);

/// E(q) = E(pi/2, q). Domain 0 <= q <= 1; E(1) = 1.
double complete_E(double q);

/// Both complete integrals from one AGM sweep.
struct CompletePair {
  double K;
  double E;
};
CompletePair complete_KE(double q);

/// F(x, q) = int_0^x (1 - q^2 sin^2 t)^{-1/2} dt for any real x.
double incomplete_F(double x, double q);

/// E(x, q) = int_0^x (1 - q^2 sin^2 t)^{1/2} dt for any real x.
double incomplete_E(double x, double q);

/// Jacobi amplitude: the inverse of x -> F(x, q).
double jacobi_am(double u, double q);

double jacobi_sn(double u, double q);
double jacobi_cn(double u, double q);
double jacobi_dn(double u, double q);

/// sn, cn, dn and the amplitude from one inversion.
struct JacobiTriple {
  double am;
  double sn;
  double cn;
  double dn;
};
JacobiTriple jacobi(double u, double q);

/// dK/dq = E/(q(1-q^2)) - K/q. Domain 0 < q < 1.
double dK_dq(double q);

/// dE/dq = (E - K)/q. Domain 0 < q < 1.
double dE_dq(double q);

/// Adaptive Gauss-Kronrod (7/15) quadrature of a scalar integrand on [a, b].
/// Used internally for the incomplete integrals and exposed for closed-form
/// energy checks.
template <class Fn>
double integrate(Fn&& f, double a, double b, double abs_tol = 1e-13,
                 int max_depth = 40);

}  // namespace elastica::elliptic

#include "elastica/detail/gauss_kronrod.hpp"
