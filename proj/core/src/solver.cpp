#include "qcurve/solver.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace qcurve {

namespace {

// Shared state for one solve: quadrature, basis matrix, eigenvalues, norms.
struct Workspace {
  QuadratureRule rule;
  Eigen::MatrixXd B;        // Q x (K+1)
  Eigen::VectorXd lambda;   // Paneitz eigenvalues
  Eigen::VectorXd nu;       // basis norms
  Eigen::VectorXd precond;  // alpha lambda_k + n!
  double S;                 // weight integral
  double fac;               // (n-1)!

  Workspace(const EquationParams& p, const BasisSpec& spec, int quad_nodes)
      : rule(build_quadrature(spec.n, quad_nodes > 0 ? quad_nodes : 2 * spec.K + spec.n)),
        B(basis_matrix(spec, rule.nodes)),
        lambda(spec.K + 1),
        nu(spec.K + 1),
        precond(spec.K + 1),
        S(weight_integral(spec.n)),
        fac(factorial_as_double(spec.n - 1)) {
    const double nfac = factorial_as_double(spec.n);
    for (int k = 0; k <= spec.K; ++k) {
      lambda[k] = eigenvalues(spec.n, k).lambda;
      nu[k] = basis_norm_sq(spec.n, k);
      precond[k] = p.alpha * lambda[k] + nfac;
    }
  }

  // residual coefficients, normalized density at nodes, gamma
  void eval(const EquationParams& p, const Eigen::VectorXd& a, Eigen::VectorXd& F,
            Eigen::VectorXd& ghat, double& gamma) const {
    const Eigen::VectorXd uv = B * a;
    const Eigen::VectorXd env = (p.n * uv.array()).exp();
    if (!env.allFinite()) throw std::overflow_error("newton_solve: e^{nu} overflow");
    gamma = rule.weights.dot(env);
    ghat = (S / gamma) * env;
    Eigen::VectorXd ehat = B.transpose() * rule.weights.cwiseProduct(ghat);
    ehat.array() /= nu.array();
    F = p.alpha * lambda.cwiseProduct(a) - fac * ehat;
    F[0] = fac * (1.0 - ehat[0]);
  }

  double norm(const Eigen::VectorXd& F) const {
    double s = 0.0;
    for (int k = static_cast<int>(F.size()) - 1; k >= 1; --k) {
      const double pre = F[k] / precond[k];
      s += nu[k] * pre * pre;
    }
    return std::sqrt(s);
  }

  Eigen::MatrixXd jacobian(const EquationParams& p, const Eigen::VectorXd& ghat) const {
    const Eigen::VectorXd wg = rule.weights.cwiseProduct(ghat);
    Eigen::MatrixXd J = B.transpose() * wg.asDiagonal() * B;  // <g^ C_k C_l>_w
    const Eigen::VectorXd m = B.transpose() * wg;             // <g^ C_l>_w
    const Eigen::VectorXd ehat = m.cwiseQuotient(nu);
    J.array().colwise() /= nu.array();
    J -= (ehat / S) * m.transpose();
    J *= -fac * p.n;
    J.diagonal() += p.alpha * lambda;
    return J;
  }
};

}  // namespace

Eigen::MatrixXd newton_jacobian(const EquationParams& p, const SpectralField& u,
                                const QuadratureRule& rule) {
  Workspace ws(p, u.spec, rule.Q);
  Eigen::VectorXd F, ghat;
  double gamma = 0.0;
  ws.eval(p, u.coeffs, F, ghat, gamma);
  return ws.jacobian(p, ghat);
}

SolutionPoint newton_solve(const EquationParams& p, const SpectralField& init,
                           const NewtonOptions& opts) {
  if (init.n() != p.n) throw std::invalid_argument("newton_solve: dimension mismatch");
  if (std::abs(init.coeffs[0]) > 1e-14)
    throw std::invalid_argument("newton_solve: init must be in the zero-mean gauge (a_0 = 0)");
  const int K = init.K();
  Workspace ws(p, init.spec, opts.quad_nodes);

  Eigen::VectorXd a = init.coeffs;
  Eigen::VectorXd F, ghat;
  double gamma = 0.0;
  std::vector<double> history;

  for (int it = 0; it <= opts.max_iter; ++it) {
    ws.eval(p, a, F, ghat, gamma);
    const double r = ws.norm(F);
    history.push_back(r);
    if (r <= opts.tol) {
      SolutionPoint sol = make_solution_point(p, SpectralField(init.spec, a), ws.rule);
      return sol;
    }
    if (it == opts.max_iter) break;

    const Eigen::MatrixXd J = ws.jacobian(p, ghat);
    const Eigen::VectorXd d =
        J.bottomRightCorner(K, K).partialPivLu().solve((-F.tail(K)).eval());

    double step = 1.0;
    bool accepted = false;
    Eigen::VectorXd trial = a;
    while (step >= opts.min_step) {
      trial.tail(K) = a.tail(K) + step * d;
      try {
        ws.eval(p, trial, F, ghat, gamma);
      } catch (const std::overflow_error&) {
        step *= opts.backtrack;
        continue;
      }
      const double rn = ws.norm(F);
      if (rn <= 0.99 * r || rn <= opts.tol) {
        accepted = true;
        break;
      }
      step *= opts.backtrack;
    }
    if (!accepted)
      throw SolveError("newton_solve: line search stalled at residual " + std::to_string(r),
                       history);
    a = trial;
  }
  throw SolveError("newton_solve: no convergence in " + std::to_string(opts.max_iter) +
                       " iterations (residual " + std::to_string(history.back()) + ")",
                   history);
}

std::vector<double> jacobian_spectrum_at_zero(const EquationParams& p, int K) {
  const double nfac = factorial_as_double(p.n);
  std::vector<double> s;
  s.reserve(K);
  for (int k = 1; k <= K; ++k) s.push_back(p.alpha * eigenvalues(p.n, k).lambda - nfac);
  return s;
}

SolutionClass classify(const SolutionPoint& sol) {
  return fluctuation_norm_sq(sol.u) <= 1e-16 ? SolutionClass::Constant
                                             : SolutionClass::NonConstant;
}

}  // namespace qcurve
