#pragma once

#include <vector>

#include "qcurve/field.hpp"

namespace qcurve {

/// Parameters of  alpha P_n u + (n-1)!(1 - e^{nu}/int e^{nu} dw) = 0,
/// with the continuation parameter rho = (n-1)!/alpha.
struct EquationParams {
  int n;
  double alpha;
  double rho;

  static EquationParams from_alpha(int n, double alpha);
  static EquationParams from_rho(int n, double rho);
};

struct Diagnostics {
  double l_inf = 0.0;       ///< max |u| on a dense grid
  double beta = 0.0;        ///< first hatted coefficient d_1 of G
  double gamma = 0.0;       ///< int (1-x^2)^((n-2)/2) e^{nu} dx
  double mean_shift = 0.0;  ///< constant c with int e^{n(u+c)} dw = 1
};

/// A solved (alpha, u) pair in the zero-mean gauge a_0 = 0.
struct SolutionPoint {
  EquationParams params;
  SpectralField u;
  double residual_norm = 0.0;
  Diagnostics diagnostics;
};

/// P_n u: coefficient-wise multiplication by lambda_k.
SpectralField apply_paneitz(const SpectralField& u);

/// Independent route for even n: (-1)^(n/2) [(1-x^2)^(n/2) u']^(n-1),
/// assembled from exact coefficient operators.  Exact on polynomials when
/// rule.Q resolves degree K+n.
SpectralField apply_paneitz_differential(const SpectralField& u, const QuadratureRule& rule);

/// gamma = int (1-x^2)^((n-2)/2) e^{nu} dx; throws on overflow of e^{nu}.
double gamma_integral(const SpectralField& u, const QuadratureRule& rule);

/// Spectral residual F of the reduced equation: for k >= 1,
/// F_k = alpha lambda_k a_k - (n-1)! e^_k  with e^_k the hatted coefficients
/// of the normalized density g^ = S_n e^{nu}/gamma; F_0 = (n-1)!(1 - e^_0).
SpectralField residual(const EquationParams& p, const SpectralField& u,
                       const QuadratureRule& rule);

/// L2(w) norm of the preconditioned residual over modes 1..K:
/// sqrt( sum nu_k (F_k / (alpha lambda_k + n!))^2 ).
double residual_norm(const EquationParams& p, const SpectralField& F);

/// J_alpha(u) = (alpha/2) int (P_n u) u dw + (n-1)! int u dw
///            - ((n-1)!/n) ln int e^{nu} dw, evaluated spectrally.
double functional_J(const EquationParams& p, const SpectralField& u, const QuadratureRule& rule);

/// The axially symmetric reduction I_alpha coincides with J_alpha here.
double functional_I(const EquationParams& p, const SpectralField& u, const QuadratureRule& rule);

/// First-momentum functional: replaces the log mass term by
/// (1/2) ln( (int e^{nu} dw)^2 - (int e^{nu} x dw)^2 ).  Throws a domain
/// error if the log argument is not positive.
double functional_scriptJ(const EquationParams& p, const SpectralField& u,
                          const QuadratureRule& rule);

struct GQuantities {
  double beta;         ///< d_1 of G = (1-x^2) u'
  double seminorm_sq;  ///< |G|^2 = sum_{k>=1} lambda_k d_k^2 nu_k
  double momentum;     ///< int x (1-x^2)^((n-2)/2) e^{nu} dx
};

GQuantities g_quantities(const SpectralField& u, const QuadratureRule& rule);

/// Margins (2j+1)!/alpha - max_grid G_j for  G_j = (-1)^j [(1-x^2)^j G]^(2j+1),
/// j = 0..n/2-1, evaluated on a uniform grid (default 2001 points).  The
/// derivatives are exact coefficient-space operators applied to the banded G;
/// trailing coefficients below the noise floor are dropped first.
/// Requires a converged solution (residual_norm <= 1e-9).
std::vector<double> gradient_bound_margins(const SolutionPoint& sol, int grid_points = 2001);

/// Same margins for an explicit (params, u) pair without the convergence gate;
/// used internally and by the verification suites.
std::vector<double> gradient_bound_margins(const EquationParams& p, const SpectralField& u,
                                           int grid_points = 2001);

/// Populate Diagnostics and the residual norm for a (params, u) pair.
SolutionPoint make_solution_point(const EquationParams& p, const SpectralField& u,
                                  const QuadratureRule& rule);

}  // namespace qcurve
