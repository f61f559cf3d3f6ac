#include "qcurve/continuation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <memory>

namespace qcurve {

std::vector<BifurcationPoint> bifurcation_points(int n, int kmax) {
  if (kmax < 1) throw std::invalid_argument("bifurcation_points: kmax must be >= 1");
  std::vector<BifurcationPoint> pts;
  pts.reserve(kmax);
  const double nfac = factorial_as_double(n);
  for (int k = 1; k <= kmax; ++k) {
    const double lam = eigenvalues(n, k).lambda;
    pts.push_back({k, lam / n, nfac / lam});
  }
  return pts;
}

std::vector<double> detect_trivial_crossings(int n, int kmax) {
  // f_k(rho) = ((n-1)!/rho) lambda_k - n! is monotone in rho; bracket each
  // root between the neighboring closed-form values and bisect.
  const double fac = factorial_as_double(n - 1);
  const double nfac = factorial_as_double(n);
  std::vector<double> roots;
  roots.reserve(kmax);
  for (int k = 1; k <= kmax; ++k) {
    const double lam = eigenvalues(n, k).lambda;
    double lo = 0.5 * lam / n, hi = 2.0 * lam / n;
    auto f = [&](double rho) { return (fac / rho) * lam - nfac; };
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (f(mid) > 0.0)
        lo = mid;
      else
        hi = mid;
      if (hi - lo <= 1e-14 * hi) break;
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

double mode_slope(int n, int k) {
  if (k % 2 == 1) return 0.0;
  const QuadratureRule rule = build_quadrature(n, 2 * k + 4);
  const BasisSpec spec(n, k + 1);
  Eigen::VectorXd ck(rule.Q);
  for (int q = 0; q < rule.Q; ++q) ck[q] = gegenbauer_eval(spec, k, rule.nodes[q]);
  const double i2 = rule.weights.dot(ck.cwiseProduct(ck).eval());
  const double i3 = rule.weights.dot(ck.cwiseProduct(ck).cwiseProduct(ck).eval());
  const double rho_k = eigenvalues(n, k).lambda / n;
  return -0.5 * n * rho_k * i3 / i2;
}

double transcritical_slope(int n) {
  return -factorial_as_double(n + 1) * (n - 1.0) * (n - 1.0) / (n * (n + 5.0));
}

BranchStart branch_switch(int n, int k, int sign, double eps) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("branch_switch: sign must be +1/-1");
  if (k < 2) throw std::invalid_argument("branch_switch: k must be >= 2");
  const double slope = mode_slope(n, k);
  if (eps <= 0.0) {
    eps = 1e-3 / std::sqrt(std::max(std::abs(slope), 1e-6));
    eps = std::clamp(eps, 1e-5, 1e-2);
  }
  double amp;
  if (k % 2 == 0 && slope != 0.0) {
    // label selects the rho direction: sign=-1 wants slope*amp < 0
    amp = (slope < 0.0 ? -sign : sign) * eps;
  } else {
    amp = sign * eps;
  }
  const double rho_k = eigenvalues(n, k).lambda / n;
  const double rho0 = rho_k + slope * amp;
  const int K0 = std::max(2 * k, 8);
  SpectralField init = SpectralField::zero(BasisSpec(n, K0));
  init.coeffs[k] = amp;
  return {EquationParams::from_rho(n, rho0), init, {k, sign}, eps};
}

namespace {

struct ArcWorkspace {
  EquationParams base;  // carries n
  BasisSpec spec;
  QuadratureRule rule;
  Eigen::MatrixXd B;
  Eigen::VectorXd lambda, nu;
  double S, fac, nfac;

  ArcWorkspace(int n, int K)
      : base(EquationParams::from_alpha(n, 1.0)),
        spec(n, K),
        rule(build_quadrature(n, 2 * K + n)),
        B(basis_matrix(spec, rule.nodes)),
        lambda(K + 1),
        nu(K + 1),
        S(weight_integral(n)),
        fac(factorial_as_double(n - 1)),
        nfac(factorial_as_double(n)) {
    for (int k = 0; k <= K; ++k) {
      lambda[k] = eigenvalues(n, k).lambda;
      nu[k] = basis_norm_sq(n, k);
    }
  }

  int K() const { return spec.K; }

  void eval(double rho, const Eigen::VectorXd& a, Eigen::VectorXd& F, Eigen::VectorXd& ghat,
            double& gamma) const {
    const double alpha = fac / rho;
    const Eigen::VectorXd uv = B * a;
    const Eigen::VectorXd env = (spec.n * uv.array()).exp();
    if (!env.allFinite()) throw std::overflow_error("continue_branch: e^{nu} overflow");
    gamma = rule.weights.dot(env);
    ghat = (S / gamma) * env;
    Eigen::VectorXd ehat = B.transpose() * rule.weights.cwiseProduct(ghat);
    ehat.array() /= nu.array();
    F = alpha * lambda.cwiseProduct(a) - fac * ehat;
    F[0] = fac * (1.0 - ehat[0]);
  }

  double norm(double rho, const Eigen::VectorXd& F) const {
    const double alpha = fac / rho;
    double s = 0.0;
    for (int k = K(); k >= 1; --k) {
      const double pre = F[k] / (alpha * lambda[k] + nfac);
      s += nu[k] * pre * pre;
    }
    return std::sqrt(s);
  }

  Eigen::MatrixXd jacobian(double rho, const Eigen::VectorXd& ghat) const {
    const double alpha = fac / rho;
    const Eigen::VectorXd wg = rule.weights.cwiseProduct(ghat);
    Eigen::MatrixXd J = B.transpose() * wg.asDiagonal() * B;
    const Eigen::VectorXd m = B.transpose() * wg;
    const Eigen::VectorXd ehat = m.cwiseQuotient(nu);
    J.array().colwise() /= nu.array();
    J -= (ehat / S) * m.transpose();
    J *= -fac * spec.n;
    J.diagonal() += alpha * lambda;
    return J;
  }

  // dF/drho = -(alpha/rho) lambda_k a_k
  Eigen::VectorXd dF_drho(double rho, const Eigen::VectorXd& a) const {
    const double alpha = fac / rho;
    return (-alpha / rho) * lambda.cwiseProduct(a);
  }
};

// Solve with the amplitude of mode kpin held fixed; unknowns are rho and the
// remaining modes 1..K.  Used for the first two points off the bifurcation.
bool solve_pinned(const ArcWorkspace& ws, int kpin, double amp, double& rho, Eigen::VectorXd& a,
                  double tol, int max_iter = 60) {
  const int K = ws.K();
  a[kpin] = amp;
  Eigen::VectorXd F, ghat;
  double gamma = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    ws.eval(rho, a, F, ghat, gamma);
    if (ws.norm(rho, F) <= tol) return true;
    const Eigen::MatrixXd J = ws.jacobian(rho, ghat);
    const Eigen::VectorXd dr = ws.dF_drho(rho, a);
    Eigen::MatrixXd A(K, K);
    Eigen::VectorXd rhs = -F.tail(K);
    A.col(0) = dr.tail(K);
    int col = 1;
    for (int k = 1; k <= K; ++k) {
      if (k == kpin) continue;
      A.col(col++) = J.block(1, k, K, 1);
    }
    const Eigen::VectorXd d = A.partialPivLu().solve(rhs);
    rho += d[0];
    col = 1;
    for (int k = 1; k <= K; ++k) {
      if (k == kpin) continue;
      a[k] += d[col++];
    }
  }
  return false;
}

}  // namespace

Branch continue_branch(const BranchStart& start, const ContinuationOptions& opts) {
  const int n = start.params.n;
  const int kmode = start.origin.k;
  const double rho_scale = eigenvalues(n, kmode).lambda / n;
  int K = std::max({opts.K0, start.init.K(), 2 * kmode + 2});

  auto ws = std::make_unique<ArcWorkspace>(n, K);
  Branch branch;
  branch.origin = start.origin;

  auto record = [&](double rho, const Eigen::VectorXd& a, double arc) {
    SolutionPoint sol =
        make_solution_point(EquationParams::from_rho(n, rho), SpectralField(ws->spec, a), ws->rule);
    branch.points.push_back({rho, sol.params.alpha, std::move(sol), arc, a[kmode]});
  };

  // first two points, amplitude-pinned
  const double amp0 = start.init.coeffs[kmode];
  double rho = start.params.rho;
  Eigen::VectorXd a = Eigen::VectorXd::Zero(K + 1);
  a.head(start.init.coeffs.size()) = start.init.coeffs;
  if (!solve_pinned(*ws, kmode, amp0, rho, a, opts.tol))
    throw SolveError("continue_branch: corrector failed at the branch seed", {});
  record(rho, a, 0.0);

  double rho_b = rho;
  Eigen::VectorXd a_b = a;
  a_b[kmode] = 1.5 * amp0;
  rho_b += mode_slope(n, kmode) * 0.5 * amp0;
  if (!solve_pinned(*ws, kmode, 1.5 * amp0, rho_b, a_b, opts.tol))
    throw SolveError("continue_branch: corrector failed at the second seed point", {});
  {
    const double darc = std::hypot((rho_b - rho) / rho_scale, (a_b - a).norm());
    record(rho_b, a_b, branch.points.back().arc_param + darc);
  }

  double ds = opts.ds;
  int folds = 0;
  double last_drho = rho_b - rho;
  bool entered_window = false;

  auto embed = [&](const Eigen::VectorXd& v) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(K + 1);
    out.head(v.size()) = v;
    return out;
  };

  for (int step = 0; step < opts.max_steps; ++step) {
    const BranchPoint& p1 = branch.points[branch.points.size() - 1];
    const BranchPoint& p0 = branch.points[branch.points.size() - 2];
    Eigen::VectorXd a1 = embed(p1.sol.u.coeffs);
    Eigen::VectorXd a0 = embed(p0.sol.u.coeffs);
    double t_rho = (p1.rho - p0.rho) / rho_scale;
    Eigen::VectorXd t_a = a1 - a0;
    const double tn = std::hypot(t_rho, t_a.norm());
    t_rho /= tn;
    t_a /= tn;

    bool accepted = false;
    double rho_c = 0.0;
    Eigen::VectorXd a_c;
    while (!accepted && ds >= opts.ds_min) {
      rho_c = p1.rho + ds * t_rho * rho_scale;
      a_c = a1 + ds * t_a;
      bool ok = false;
      try {
        Eigen::VectorXd F, ghat;
        double gamma = 0.0;
        for (int it = 0; it < 12; ++it) {
          ws->eval(rho_c, a_c, F, ghat, gamma);
          const double g =
              t_rho * (rho_c - p1.rho) / rho_scale + t_a.dot(a_c - a1) - ds;
          if (ws->norm(rho_c, F) <= opts.tol && std::abs(g) <= 1e-12 * std::max(1.0, ds)) {
            ok = true;
            break;
          }
          const Eigen::MatrixXd J = ws->jacobian(rho_c, ghat);
          const Eigen::VectorXd dr = ws->dF_drho(rho_c, a_c);
          const int M = ws->K();
          Eigen::MatrixXd A(M + 1, M + 1);
          A.topLeftCorner(M, M) = J.bottomRightCorner(M, M);
          A.topRightCorner(M, 1) = dr.tail(M);
          A.bottomLeftCorner(1, M) = t_a.tail(M).transpose();
          A(M, M) = t_rho / rho_scale;
          Eigen::VectorXd rhs(M + 1);
          rhs.head(M) = -F.tail(M);
          rhs[M] = -g;
          const Eigen::VectorXd d = A.partialPivLu().solve(rhs);
          a_c.tail(M) += d.head(M);
          rho_c += d[M];
        }
      } catch (const std::overflow_error&) {
        ok = false;
      }
      // a corrector that slid back to the trivial branch is a failure
      if (ok && a_c.cwiseAbs2().dot(ws->nu) - ws->nu[0] * a_c[0] * a_c[0] <= 1e-16) ok = false;
      if (!ok) {
        ds *= 0.5;
        continue;
      }
      accepted = true;
    }
    if (!accepted) {
      branch.termination = Termination::StepFailure;
      return branch;
    }

    const double alpha_c = factorial_as_double(n - 1) / rho_c;
    const bool inside = alpha_c > opts.alpha_lo && alpha_c < opts.alpha_hi;
    if (entered_window && !inside) {
      branch.termination = Termination::ReachedTarget;
      return branch;
    }
    if (inside) entered_window = true;

    const double drho = rho_c - p1.rho;
    if (drho * last_drho < 0.0 && ++folds > opts.max_folds) {
      branch.termination = Termination::FoldCountExceeded;
      return branch;
    }
    if (drho != 0.0) last_drho = drho;

    const double darc = std::hypot((rho_c - p1.rho) / rho_scale, (a_c - a1).norm());
    record(rho_c, a_c, p1.arc_param + darc);
    if (branch.points.back().sol.diagnostics.l_inf >= opts.linf_stop) {
      branch.termination = Termination::ReachedTarget;
      return branch;
    }

    // refine K when the coefficient tail carries energy
    double total = 0.0, tail = 0.0;
    for (int k = 1; k <= ws->K(); ++k) {
      const double e = ws->nu[k] * a_c[k] * a_c[k];
      total += e;
      if (k > 3 * ws->K() / 4) tail += e;
    }
    if (tail > 1e-18 * total && K < opts.K_max) {
      K = std::min(2 * K, opts.K_max);
      ws = std::make_unique<ArcWorkspace>(n, K);
      for (auto idx : {branch.points.size() - 2, branch.points.size() - 1}) {
        BranchPoint& bp = branch.points[idx];
        Eigen::VectorXd az = Eigen::VectorXd::Zero(K + 1);
        az.head(bp.sol.u.coeffs.size()) = bp.sol.u.coeffs;
        bp.sol.u = SpectralField(ws->spec, az);
      }
    }

    ds = std::min(ds * 1.3, opts.ds_max);
  }
  branch.termination = Termination::MaxSteps;
  return branch;
}

double slope_estimate(const Branch& branch, double amp_window) {
  const int n = branch.points.empty() ? 0 : branch.points.front().sol.params.n;
  std::vector<std::pair<double, double>> pts;  // (xi, rho)
  for (const BranchPoint& p : branch.points)
    if (std::abs(p.amp) <= amp_window) pts.push_back({2.0 * p.amp / (n - 1.0), p.rho});
  if (pts.size() < 3)
    throw std::invalid_argument("slope_estimate: need at least 3 points with |amp| <= window");
  const double rho_k = eigenvalues(n, branch.origin.k).lambda / n;
  pts.push_back({0.0, rho_k});
  Eigen::MatrixXd A(pts.size(), 3);
  Eigen::VectorXd b(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    A(i, 0) = 1.0;
    A(i, 1) = pts[i].first;
    A(i, 2) = pts[i].first * pts[i].first;
    b[i] = pts[i].second;
  }
  const Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
  return c[1];
}

SolutionPoint polish_at_alpha(const Branch& branch, double alpha, double tol) {
  if (branch.points.empty()) throw std::invalid_argument("polish_at_alpha: empty branch");
  const BranchPoint* best = &branch.points.front();
  for (const BranchPoint& p : branch.points)
    if (std::abs(p.alpha - alpha) < std::abs(best->alpha - alpha)) best = &p;
  NewtonOptions o;
  o.tol = tol;
  o.max_iter = 80;
  return newton_solve(EquationParams::from_alpha(best->sol.params.n, alpha), best->sol.u, o);
}

SpectralField normalized_representative(const SolutionPoint& sol) {
  SpectralField v = sol.u;
  v.coeffs[0] += sol.diagnostics.mean_shift;
  return v;
}

}  // namespace qcurve
