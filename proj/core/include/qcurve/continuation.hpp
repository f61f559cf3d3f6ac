#pragma once

#include <vector>

#include "qcurve/solver.hpp"

namespace qcurve {

struct BifurcationPoint {
  int k;
  double rho;    ///< rho_k = lambda_k / n
  double alpha;  ///< alpha_k = n! / lambda_k
};

std::vector<BifurcationPoint> bifurcation_points(int n, int kmax);

/// Zero crossings of the trivial-branch spectrum located by bisection in rho
/// (one root per mode); honest detection, not the closed formula.
std::vector<double> detect_trivial_crossings(int n, int kmax);

/// d rho / d a_k at the bifurcation point in the hatted amplitude, from the
/// cubic/quadratic ratio of Chat_k:  -(n rho_k / 2) <Chat_k^3>_w / <Chat_k^2>_w.
/// Zero for odd k.
double mode_slope(int n, int k);

/// The k = 2 slope in the normalization the classical bifurcation formula
/// uses: -(n+1)!(n-1)^2 / (n(n+5)) = (n-1)/2 * mode_slope(n, 2).
double transcritical_slope(int n);

struct BranchOrigin {
  int k;
  int sign;  ///< +1 / -1, see branch_switch
};

struct BranchPoint {
  double rho;
  double alpha;
  SolutionPoint sol;
  double arc_param;
  double amp;  ///< coefficient of the origin mode k
};

enum class Termination { ReachedTarget, StepFailure, FoldCountExceeded, MaxSteps };

struct Branch {
  BranchOrigin origin;
  std::vector<BranchPoint> points;
  Termination termination = Termination::ReachedTarget;
};

struct BranchStart {
  EquationParams params;
  SpectralField init;
  BranchOrigin origin;
  double eps;
};

/// Predictor for switching onto the mode-k branch.  For even k the label
/// sign=-1 selects the branch that leaves toward decreasing rho (the
/// existence window) and sign=+1 the increasing-rho side; the coefficient
/// sign follows from the transcritical slope.  For odd k the slope vanishes
/// and the label is the literal sign of the seed amplitude.
/// eps <= 0 picks the default 1e-3 |slope|^{-1/2} clamped to [1e-5, 1e-2].
BranchStart branch_switch(int n, int k, int sign, double eps = 1e-3);

struct ContinuationOptions {
  double ds = 0.02;
  double ds_max = 0.05;
  double ds_min = 1e-6;
  int max_steps = 2000;
  double alpha_lo = 0.0;
  double alpha_hi = 1e30;
  double linf_stop = 1e30;
  double tol = 1e-10;
  int K0 = 48;
  int K_max = 448;
  int max_folds = 8;
};

/// Pseudo-arclength predictor-corrector in (rho, coefficients).  The first
/// two points are solved with the origin-mode amplitude pinned; afterwards
/// the tangent is the secant of the last two points.  Step halving on
/// corrector failure, tail-energy triggered K refinement, fold counting.
Branch continue_branch(const BranchStart& start, const ContinuationOptions& opts);

/// d rho / d xi at amp -> 0 with xi = 2 amp / (n-1), least squares with a
/// quadratic term over points with |amp| <= amp_window (plus the bifurcation
/// point itself).  Needs at least 3 such points.
double slope_estimate(const Branch& branch, double amp_window = 0.05);

/// Newton-polish a branch point at exactly the requested alpha, seeding from
/// the branch point whose alpha is nearest.
SolutionPoint polish_at_alpha(const Branch& branch, double alpha, double tol = 1e-11);

/// Representative with int e^{nu} dw = 1 (shifts u by the mean_shift).
SpectralField normalized_representative(const SolutionPoint& sol);

}  // namespace qcurve
