#pragma once

#include <Eigen/Core>

namespace qcurve {

/// Axially symmetric Gegenbauer basis on S^n, hat-normalized so that
/// Chat_k(1) = 1 for every degree k.  All coefficient vectors in this
/// library are expansions u(x) = sum_k a_k Chat_k(x) for this basis.
struct BasisSpec {
  int n;  ///< sphere dimension, n >= 2
  int K;  ///< truncation degree, K >= 2

  BasisSpec(int n_, int K_);

  bool operator==(const BasisSpec&) const = default;
};

/// (lambda_bar_k, lambda_k): Laplacian and Paneitz eigenvalues on mode k.
/// lambda_bar_k = k(k+n-1), lambda_k = prod_{s=0}^{n-1}(k+s).
struct ModeEigenvalues {
  double lambda_bar;
  double lambda;
};

ModeEigenvalues eigenvalues(int n, int k);

double factorial_as_double(int m);

/// int_{-1}^{1} (1-x^2)^((n-2)/2) dx, any n >= 2.
double weight_integral(int n);

/// c_n = Gamma((n+1)/2) / (sqrt(pi) Gamma(n/2)) = 1 / weight_integral(n);
/// converts axial weighted integrals into normalized sphere averages.
double sphere_average_factor(int n);

/// nu_k = int (1-x^2)^((n-2)/2) Chat_k^2 dx.
double basis_norm_sq(int n, int k);

/// Chat_k(x) by the three-term recurrence.  Requires 0 <= k <= spec.K and
/// |x| <= 1.
double gegenbauer_eval(const BasisSpec& spec, int k, double x);

// -- exact coefficient-space operators --------------------------------------
//
// All of these act on hatted coefficient vectors of dimension-n basis
// functions and are exact on polynomials (band/recurrence identities).

/// Coefficients of u' from coefficients of u (degree drops by one).
Eigen::VectorXd derivative_coeffs(int n, const Eigen::VectorXd& a);

/// Coefficients of x*u (degree grows by one).
Eigen::VectorXd multiply_x_coeffs(int n, const Eigen::VectorXd& a);

/// Coefficients of (1-x^2)*u (degree grows by two).
Eigen::VectorXd multiply_one_minus_x2_coeffs(int n, const Eigen::VectorXd& a);

/// Coefficients of G = (1-x^2) u' (degree grows by one).  Uses the banded
/// relation (1-x^2) Chat_k' = lambda_bar_k/(2k+n-1) (Chat_{k-1} - Chat_{k+1}).
Eigen::VectorXd gradient_coeffs(int n, const Eigen::VectorXd& a);

/// Largest index with |c_k| > rel_floor * max|c| (0 if all zero).  Used to
/// drop trailing noise before repeated differentiation.
int effective_degree(const Eigen::VectorXd& c, double rel_floor = 1e-13);

}  // namespace qcurve
