#pragma once

#include <iosfwd>
#include <string>

#include "qcurve/continuation.hpp"
#include "qcurve/verifier.hpp"

namespace qcurve {

/// JSON text of a solution file: {n, K, alpha, rho, gauge, coeffs[],
/// residual_norm, diagnostics{...}}.  Numbers round-trip bit-exactly.
std::string solution_to_json(const SolutionPoint& sol);
SolutionPoint solution_from_json(const std::string& text);

void save_solution(const std::string& path, const SolutionPoint& sol);
SolutionPoint load_solution(const std::string& path);

/// CSV with header rho,alpha,amp_a2,l_inf,beta,gamma,residual_norm and one
/// row per accepted point in arc order, 17 significant digits.
void write_branch_csv(std::ostream& os, const Branch& branch);

std::string report_to_json(const VerificationReport& rep);
std::string reports_to_json(const std::vector<VerificationReport>& reps);

}  // namespace qcurve
