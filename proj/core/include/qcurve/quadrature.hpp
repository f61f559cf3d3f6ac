#pragma once

#include <Eigen/Core>

namespace qcurve {

/// Gauss-Jacobi rule for the weight (1-x^2)^((n-2)/2) on [-1, 1].
/// Exact for polynomial integrands of degree <= 2Q-1 against the weight.
struct QuadratureRule {
  int n;  ///< sphere dimension the weight belongs to
  int Q;  ///< node count
  Eigen::VectorXd nodes;    ///< strictly increasing, symmetric about 0
  Eigen::VectorXd weights;  ///< positive, symmetric
};

/// Golub-Welsch on the Jacobi recurrence (symmetric tridiagonal eigenvalue
/// problem), nodes polished by one Newton step, weights from the Christoffel
/// function.
QuadratureRule build_quadrature(int n, int Q);

/// sum_q w_q f(x_q) for values sampled at the rule's nodes.
double integrate(const QuadratureRule& rule, const Eigen::VectorXd& values);

}  // namespace qcurve
