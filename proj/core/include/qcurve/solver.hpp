#pragma once

#include <stdexcept>
#include <vector>

#include "qcurve/equation.hpp"

namespace qcurve {

struct NewtonOptions {
  double tol = 1e-12;      ///< preconditioned residual tolerance
  int max_iter = 50;
  double backtrack = 0.5;  ///< step-halving factor
  double min_step = 1e-4;  ///< smallest accepted line-search fraction
  int quad_nodes = 0;      ///< 0 -> default oversampling Q = 2K + n
};

/// Thrown when Newton stalls or e^{nu} blows up; carries the residual history.
class SolveError : public std::runtime_error {
 public:
  SolveError(const std::string& what, std::vector<double> history)
      : std::runtime_error(what), residual_history(std::move(history)) {}
  std::vector<double> residual_history;
};

/// Damped Newton on the preconditioned spectral residual at fixed alpha.
/// init must be in the zero-mean gauge (a_0 = 0).
SolutionPoint newton_solve(const EquationParams& p, const SpectralField& init,
                           const NewtonOptions& opts = {});

/// Dense Jacobian dF_k/da_l on modes 0..K (row/col 0 included for tests).
Eigen::MatrixXd newton_jacobian(const EquationParams& p, const SpectralField& u,
                                const QuadratureRule& rule);

/// Trivial-branch spectrum {alpha lambda_k - n! : 1 <= k <= K}; zero
/// crossings sit at the bifurcation values alpha_k = n!/lambda_k.
std::vector<double> jacobian_spectrum_at_zero(const EquationParams& p, int K);

enum class SolutionClass { Constant, NonConstant };

/// Constant iff sum_{k>=1} a_k^2 nu_k <= 1e-16.
SolutionClass classify(const SolutionPoint& sol);

}  // namespace qcurve
