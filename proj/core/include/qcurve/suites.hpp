#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcurve/continuation.hpp"
#include "qcurve/verifier.hpp"

namespace qcurve {

/// Member of the alpha = 1 closed-form family u = -ln(1 - a x), analyzed at
/// degree K and wrapped as a SolutionPoint.
SolutionPoint closed_form_solution(int n, double a, int K = 96);

/// Non-constant solutions on the mode-2 existence branch at the requested
/// alpha values (branch traced once, then Newton-polished per target).
std::vector<SolutionPoint> branch_solutions(int n, const std::vector<double>& alphas,
                                            double tol = 1e-11);

std::vector<std::string> suite_names(int n);

/// Run one verification suite by name; throws std::invalid_argument for a
/// name/dimension combination that does not exist.
VerificationReport run_suite(const std::string& name, int n, int trials, std::uint64_t seed);

/// Run suites in order, fanning out across at most `threads` workers;
/// results are assembled in the order of `names` regardless of scheduling.
std::vector<VerificationReport> run_suites(const std::vector<std::string>& names, int n,
                                           int trials, std::uint64_t seed, int threads);

/// QCURVE_THREADS environment override, else hardware concurrency.
int default_thread_count();

}  // namespace qcurve
