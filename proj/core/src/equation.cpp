#include "qcurve/equation.hpp"

#include <cmath>
#include <stdexcept>

namespace qcurve {

EquationParams EquationParams::from_alpha(int n, double alpha) {
  if (n < 2) throw std::invalid_argument("EquationParams: n must be >= 2");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  return {n, alpha, factorial_as_double(n - 1) / alpha};
}

EquationParams EquationParams::from_rho(int n, double rho) {
  if (n < 2) throw std::invalid_argument("EquationParams: n must be >= 2");
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  return {n, factorial_as_double(n - 1) / rho, rho};
}

SpectralField apply_paneitz(const SpectralField& u) {
  Eigen::VectorXd c = u.coeffs;
  for (int k = 0; k <= u.K(); ++k) c[k] *= eigenvalues(u.n(), k).lambda;
  return SpectralField(u.spec, std::move(c));
}

SpectralField apply_paneitz_differential(const SpectralField& u, const QuadratureRule& rule) {
  const int n = u.n();
  if (n % 2 != 0)
    throw std::invalid_argument("apply_paneitz_differential: differential form requires even n");
  if (rule.n != n) throw std::invalid_argument("apply_paneitz_differential: dimension mismatch");
  // (1-x^2)^(n/2) u' in coefficient space, then n-1 exact derivatives.
  Eigen::VectorXd c = derivative_coeffs(n, u.coeffs);
  for (int j = 0; j < n / 2; ++j) c = multiply_one_minus_x2_coeffs(n, c);
  for (int j = 0; j < n - 1; ++j) c = derivative_coeffs(n, c);
  const double sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(u.K() + 1);
  out.head(std::min<Eigen::Index>(c.size(), out.size())) =
      sign * c.head(std::min<Eigen::Index>(c.size(), out.size()));
  return SpectralField(u.spec, std::move(out));
}

namespace {

struct DensityEval {
  Eigen::VectorXd exp_nu;  // e^{nu} at nodes
  double gamma;            // int w e^{nu}
  Eigen::VectorXd ghat;    // S_n e^{nu}/gamma at nodes
};

DensityEval density(const SpectralField& u, const QuadratureRule& rule) {
  const Eigen::VectorXd uv = synthesize(u, rule.nodes);
  DensityEval d;
  d.exp_nu = (u.n() * uv.array()).exp();
  if (!d.exp_nu.allFinite())
    throw std::overflow_error("e^{nu} overflows at a quadrature node (coefficient blow-up)");
  d.gamma = rule.weights.dot(d.exp_nu);
  d.ghat = (weight_integral(u.n()) / d.gamma) * d.exp_nu;
  return d;
}

}  // namespace

double gamma_integral(const SpectralField& u, const QuadratureRule& rule) {
  if (rule.n != u.n()) throw std::invalid_argument("gamma_integral: dimension mismatch");
  return density(u, rule).gamma;
}

SpectralField residual(const EquationParams& p, const SpectralField& u,
                       const QuadratureRule& rule) {
  if (rule.n != u.n() || p.n != u.n())
    throw std::invalid_argument("residual: dimension mismatch");
  const DensityEval d = density(u, rule);
  const SpectralField ehat = analyze(rule, d.ghat, u.spec);
  const double fac = factorial_as_double(p.n - 1);
  Eigen::VectorXd F(u.K() + 1);
  F[0] = fac * (1.0 - ehat.coeffs[0]);
  for (int k = 1; k <= u.K(); ++k)
    F[k] = p.alpha * eigenvalues(p.n, k).lambda * u.coeffs[k] - fac * ehat.coeffs[k];
  return SpectralField(u.spec, std::move(F));
}

double residual_norm(const EquationParams& p, const SpectralField& F) {
  const double nfac = factorial_as_double(p.n);
  double s = 0.0;
  for (int k = F.K(); k >= 1; --k) {
    const double pre = F.coeffs[k] / (p.alpha * eigenvalues(p.n, k).lambda + nfac);
    s += basis_norm_sq(p.n, k) * pre * pre;
  }
  return std::sqrt(s);
}

double functional_J(const EquationParams& p, const SpectralField& u, const QuadratureRule& rule) {
  const double cn = sphere_average_factor(p.n);
  const double fac = factorial_as_double(p.n - 1);
  double quad = 0.0;
  for (int k = u.K(); k >= 1; --k)
    quad += eigenvalues(p.n, k).lambda * u.coeffs[k] * u.coeffs[k] * basis_norm_sq(p.n, k);
  const double gam = gamma_integral(u, rule);
  return 0.5 * p.alpha * cn * quad + fac * u.coeffs[0] - fac / p.n * std::log(cn * gam);
}

double functional_I(const EquationParams& p, const SpectralField& u, const QuadratureRule& rule) {
  return functional_J(p, u, rule);
}

double functional_scriptJ(const EquationParams& p, const SpectralField& u,
                          const QuadratureRule& rule) {
  const double cn = sphere_average_factor(p.n);
  const double fac = factorial_as_double(p.n - 1);
  double quad = 0.0;
  for (int k = u.K(); k >= 1; --k)
    quad += eigenvalues(p.n, k).lambda * u.coeffs[k] * u.coeffs[k] * basis_norm_sq(p.n, k);
  const DensityEval d = density(u, rule);
  const double mass = cn * d.gamma;
  const double mom = cn * rule.weights.dot(rule.nodes.cwiseProduct(d.exp_nu));
  const double arg = mass * mass - mom * mom;
  if (!(arg > 0.0))
    throw std::domain_error("functional_scriptJ: momentum magnitude reaches the mass");
  return 0.5 * p.alpha * cn * quad + fac * u.coeffs[0] - fac / (2.0 * p.n) * std::log(arg);
}

GQuantities g_quantities(const SpectralField& u, const QuadratureRule& rule) {
  const SpectralField G = g_map_banded(u);
  GQuantities q;
  q.beta = G.coeffs[1];
  q.seminorm_sq = 0.0;
  for (int k = G.K(); k >= 1; --k)
    q.seminorm_sq += eigenvalues(u.n(), k).lambda * G.coeffs[k] * G.coeffs[k] *
                     basis_norm_sq(u.n(), k);
  const DensityEval d = density(u, rule);
  q.momentum = rule.weights.dot(rule.nodes.cwiseProduct(d.exp_nu));
  return q;
}

std::vector<double> gradient_bound_margins(const EquationParams& p, const SpectralField& u,
                                           int grid_points) {
  const int n = p.n;
  const SpectralField G = g_map_banded(u);
  // Drop trailing coefficients at the noise floor; repeated differentiation
  // amplifies them by powers of lambda_bar.
  const int ke = std::max(2, effective_degree(G.coeffs));
  const Eigen::VectorXd grid = Eigen::VectorXd::LinSpaced(grid_points, -1.0, 1.0);
  std::vector<double> margins;
  margins.reserve(n / 2);
  for (int j = 0; j < n / 2; ++j) {
    Eigen::VectorXd c = G.coeffs.head(ke + 1);
    for (int i = 0; i < j; ++i) c = multiply_one_minus_x2_coeffs(n, c);
    for (int i = 0; i < 2 * j + 1; ++i) c = derivative_coeffs(n, c);
    const int Kc = std::max<int>(2, static_cast<int>(c.size()) - 1);
    Eigen::VectorXd padded = Eigen::VectorXd::Zero(Kc + 1);
    padded.head(c.size()) = c;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const Eigen::VectorXd vals =
        sign * synthesize(SpectralField(BasisSpec(n, Kc), padded), grid);
    const double bound = factorial_as_double(2 * j + 1) / p.alpha;
    margins.push_back(bound - vals.maxCoeff());
  }
  return margins;
}

std::vector<double> gradient_bound_margins(const SolutionPoint& sol, int grid_points) {
  if (sol.residual_norm > 1e-9)
    throw std::invalid_argument("gradient_bound_margins: solution not converged to 1e-9");
  return gradient_bound_margins(sol.params, sol.u, grid_points);
}

SolutionPoint make_solution_point(const EquationParams& p, const SpectralField& u,
                                  const QuadratureRule& rule) {
  SolutionPoint s{p, u, 0.0, {}};
  s.residual_norm = residual_norm(p, residual(p, u, rule));
  const Eigen::VectorXd grid = Eigen::VectorXd::LinSpaced(2001, -1.0, 1.0);
  s.diagnostics.l_inf = synthesize(u, grid).cwiseAbs().maxCoeff();
  const GQuantities q = g_quantities(u, rule);
  s.diagnostics.beta = q.beta;
  s.diagnostics.gamma = gamma_integral(u, rule);
  s.diagnostics.mean_shift =
      -std::log(sphere_average_factor(p.n) * s.diagnostics.gamma) / p.n;
  return s;
}

}  // namespace qcurve
