#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcurve/equation.hpp"

namespace qcurve {

struct CheckCase {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  double defect = 0.0;     ///< lhs - rhs (or the signed slack for inequalities)
  double tolerance = 0.0;  ///< pass iff |defect| <= tolerance, or defect >= -tolerance for slacks
  bool relative = false;   ///< tolerance interpreted relative to the case scale
  bool pass = false;
  bool informational = false;  ///< reported without pass/fail semantics
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckCase> cases;

  bool all_pass() const;
  void append(const VerificationReport& other);
};

/// Identity for n = 6:
///   int (1-x^2)^2 G^2 [(1-x^2)^2 G]^(5)
///     = -5 int (1-x^2)^4 G'(G'')^2 - 80/3 int (1-x^2)^3 (G')^3.
/// Holds for smooth G vanishing at +-1 (every G = (1-x^2)u' does); the
/// endpoint condition is a precondition.  `legendre` must be a weight-one
/// rule (n = 2) exact to degree 3 deg(G) + 10.
VerificationReport check_appendix_A(const SpectralField& G, const QuadratureRule& legendre);

/// Four-term analogue for n = 8 with [(1-x^2)^3 G]^(7).
VerificationReport check_appendix_B(const SpectralField& G, const QuadratureRule& legendre);

/// Quadrature integrals vs spectral sums for the G-decompositions
/// (weighted G^2, (G')^2, the (n-2)/2-th derivative identity, and the
/// n = 6 / n = 8 shifted-eigenvalue forms).  d_0 is projected out.
VerificationReport check_decompositions(const SpectralField& G, const QuadratureRule& legendre,
                                        int n);

/// Integral identities satisfied by G at a converged solution: (i) the
/// first-mode pairing, (ii) the weighted density integral, (iii) the
/// mode-k pairings 2 <= k <= 8, (iv) the derivative seminorm identity.
VerificationReport check_lemma_equality(const SolutionPoint& sol, const QuadratureRule& rule);

/// The integrated key equation (n = 6 or 8) and the key estimate inequality.
VerificationReport check_key_equation_and_estimates(const SolutionPoint& sol,
                                                    const QuadratureRule& rule);

/// First momenta of e^{nu} and of u vanish for solutions with alpha != 1.
VerificationReport check_momenta(const SolutionPoint& sol, const QuadratureRule& rule);

/// Gradient-estimate margins for all j <= n/2 - 1 at a converged solution.
VerificationReport check_gradient_bounds(const SolutionPoint& sol);

struct Threshold {
  std::string name;
  std::string expression;  ///< exact form, e.g. "(115+sqrt(2851))/273"
  double value;
};

/// Named constants for n = 6 or n = 8 (uniqueness thresholds and the
/// auxiliary bounds), exact expression plus float.
std::vector<Threshold> thresholds(int n);

/// Sampled functional inequalities on random decaying axially symmetric
/// fields: J_1 >= 0, the first-momentum functional at alpha = n/(n+1) >= 0,
/// and I_alpha >= 0 on the center-of-mass constraint set (projection by an
/// axis Moebius shift).  Includes the extremal-family J_1 = 0 case and an
/// informational sampled minimum of I_{1/2} on the constraint set.
VerificationReport sampled_inequalities(int n, int trials, std::uint64_t seed);

/// Shift u along the axis Moebius family until the first momentum of e^{nu}
/// vanishes (bisection); returns the shifted field analyzed on `spec`.
SpectralField project_center_of_mass(const SpectralField& u, const QuadratureRule& rule);

}  // namespace qcurve
