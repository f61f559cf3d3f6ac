#include "qcurve/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "qcurve/basis.hpp"

namespace qcurve {

namespace {

// Monic Jacobi (alpha = beta = a) recurrence: x p_k = p_{k+1} + beta_k p_{k-1}.
double monic_beta(double a, int k) {
  const double t = 2.0 * k + 2.0 * a;
  return 4.0 * k * (k + a) * (k + a) * (k + 2.0 * a) / (t * t * (t + 1.0) * (t - 1.0));
}

// Orthonormal Jacobi values p~_0..p~_{m} at x, plus derivative of p~_m.
// Used for the Newton polish and the Christoffel weights.
void orthonormal_column(double a, double mu0, int m, double x, Eigen::VectorXd& p,
                        double* dpm = nullptr) {
  p.resize(m + 1);
  p[0] = 1.0 / std::sqrt(mu0);
  double dprev = 0.0, dcur = 0.0;
  Eigen::VectorXd b(m + 1);
  for (int k = 1; k <= m; ++k) b[k] = std::sqrt(monic_beta(a, k));
  if (m >= 1) {
    p[1] = x * p[0] / b[1];
    dcur = p[0] / b[1];
  }
  for (int k = 1; k < m; ++k) {
    p[k + 1] = (x * p[k] - b[k] * p[k - 1]) / b[k + 1];
    const double dnext = (p[k] + x * dcur - b[k] * dprev) / b[k + 1];
    dprev = dcur;
    dcur = dnext;
  }
  if (dpm) *dpm = (m == 0) ? 0.0 : dcur;
}

}  // namespace

QuadratureRule build_quadrature(int n, int Q) {
  if (Q < 1) throw std::invalid_argument("build_quadrature: Q must be >= 1");
  if (n < 2) throw std::invalid_argument("build_quadrature: n must be >= 2");
  const double a = (n - 2.0) / 2.0;
  const double mu0 = weight_integral(n);

  QuadratureRule rule;
  rule.n = n;
  rule.Q = Q;
  rule.nodes.resize(Q);
  rule.weights.resize(Q);

  if (Q == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = mu0;
    return rule;
  }

  Eigen::VectorXd diag = Eigen::VectorXd::Zero(Q);
  Eigen::VectorXd sub(Q - 1);
  for (int k = 1; k < Q; ++k) sub[k - 1] = std::sqrt(monic_beta(a, k));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("build_quadrature: tridiagonal eigensolver failed");
  Eigen::VectorXd x = es.eigenvalues();

  // One Newton step on the orthonormal polynomial of degree Q, then weights
  // from the Christoffel function 1 / sum_{j<Q} p~_j(x)^2.
  Eigen::VectorXd p;
  for (int i = 0; i < Q; ++i) {
    double dp = 0.0;
    orthonormal_column(a, mu0, Q, x[i], p, &dp);
    if (dp != 0.0) x[i] -= p[Q] / dp;
  }
  // enforce symmetry about 0 exactly
  for (int i = 0; i < Q / 2; ++i) {
    const double s = 0.5 * (x[i] - x[Q - 1 - i]);
    x[i] = s;
    x[Q - 1 - i] = -s;
  }
  if (Q % 2 == 1) x[Q / 2] = 0.0;

  for (int i = 0; i < Q; ++i) {
    orthonormal_column(a, mu0, Q - 1, x[i], p);
    const double w = 1.0 / p.squaredNorm();
    if (!(w > 0.0) || !std::isfinite(w))
      throw std::runtime_error("build_quadrature: non-positive weight, node solve did not converge");
    rule.weights[i] = w;
  }
  for (int i = 0; i + 1 < Q; ++i)
    if (!(x[i] < x[i + 1]))
      throw std::runtime_error("build_quadrature: nodes not strictly increasing");
  // symmetrize weights
  for (int i = 0; i < Q / 2; ++i) {
    const double w = 0.5 * (rule.weights[i] + rule.weights[Q - 1 - i]);
    rule.weights[i] = w;
    rule.weights[Q - 1 - i] = w;
  }
  rule.nodes = x;
  return rule;
}

double integrate(const QuadratureRule& rule, const Eigen::VectorXd& values) {
  if (values.size() != rule.Q)
    throw std::invalid_argument("integrate: values/node count mismatch");
  return rule.weights.dot(values);
}

}  // namespace qcurve
