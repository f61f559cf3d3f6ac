#pragma once

#include <Eigen/Core>

#include "qcurve/basis.hpp"
#include "qcurve/quadrature.hpp"

namespace qcurve {

/// Truncated expansion u(x) = sum_{k=0}^{K} a_k Chat_k(x).
struct SpectralField {
  BasisSpec spec;
  Eigen::VectorXd coeffs;  ///< size K+1

  SpectralField(BasisSpec s, Eigen::VectorXd c);
  static SpectralField zero(BasisSpec s);

  int n() const { return spec.n; }
  int K() const { return spec.K; }
};

/// Matrix B with B(q, k) = Chat_k(points[q]); points must lie in [-1, 1].
Eigen::MatrixXd basis_matrix(const BasisSpec& spec, const Eigen::VectorXd& points);

/// Projection a_k = <f, Chat_k>_w / nu_k from values at the rule's nodes.
/// Requires rule.n == spec.n and rule.Q >= spec.K + 1.
SpectralField analyze(const QuadratureRule& rule, const Eigen::VectorXd& values,
                      const BasisSpec& spec);

/// Pointwise evaluation by a single forward recurrence pass per point.
Eigen::VectorXd synthesize(const SpectralField& field, const Eigen::VectorXd& points);

/// u' as a field of degree K-1 (exact coefficient recurrence).
SpectralField derivative(const SpectralField& field);

/// G = (1-x^2) u', computed pseudo-spectrally: differentiate in coefficient
/// space, multiply by (1-x^2) at the nodes, re-analyze at degree K+1.
/// Requires rule.Q >= K + 2.
SpectralField g_map(const SpectralField& u, const QuadratureRule& rule);

/// G = (1-x^2) u' by the exact banded coefficient relation; same function as
/// g_map up to rounding, without any quadrature.
SpectralField g_map_banded(const SpectralField& u);

/// Sum of nu_k a_k^2 over k >= 1 (squared L2(w) norm of u - a_0).
double fluctuation_norm_sq(const SpectralField& u);

}  // namespace qcurve
