#include "qcurve/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace qcurve {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json case_to_json(const CheckCase& c) {
  json j{{"id", c.id},       {"lhs", c.lhs},
         {"rhs", c.rhs},     {"defect", c.defect},
         {"tolerance", c.tolerance}, {"relative", c.relative},
         {"pass", c.pass}};
  if (c.informational) j["informational"] = true;
  return j;
}

json report_json_obj(const VerificationReport& rep) {
  json cases = json::array();
  for (const CheckCase& c : rep.cases) cases.push_back(case_to_json(c));
  return json{{"suite", rep.suite}, {"seed", rep.seed}, {"cases", cases}, {"pass", rep.all_pass()}};
}

}  // namespace

std::string solution_to_json(const SolutionPoint& sol) {
  json coeffs = json::array();
  for (int k = 0; k <= sol.u.K(); ++k) coeffs.push_back(sol.u.coeffs[k]);
  const json j{{"n", sol.params.n},
               {"K", sol.u.K()},
               {"alpha", sol.params.alpha},
               {"rho", sol.params.rho},
               {"gauge", "zero-mean"},
               {"coeffs", coeffs},
               {"residual_norm", sol.residual_norm},
               {"diagnostics",
                {{"l_inf", sol.diagnostics.l_inf},
                 {"beta", sol.diagnostics.beta},
                 {"gamma", sol.diagnostics.gamma},
                 {"mean_shift", sol.diagnostics.mean_shift}}}};
  return j.dump(2) + "\n";
}

SolutionPoint solution_from_json(const std::string& text) {
  const json j = json::parse(text);
  const int n = j.at("n").get<int>();
  const int K = j.at("K").get<int>();
  if (j.at("gauge").get<std::string>() != "zero-mean")
    throw std::invalid_argument("solution file: unknown gauge");
  Eigen::VectorXd coeffs(K + 1);
  const auto& arr = j.at("coeffs");
  if (static_cast<int>(arr.size()) != K + 1)
    throw std::invalid_argument("solution file: coeffs length must be K+1");
  for (int k = 0; k <= K; ++k) coeffs[k] = arr[k].get<double>();
  if (coeffs[0] != 0.0)
    throw std::invalid_argument("solution file: coeffs[0] must be 0 in the zero-mean gauge");
  SolutionPoint sol{EquationParams::from_alpha(n, j.at("alpha").get<double>()),
                    SpectralField(BasisSpec(n, K), std::move(coeffs)),
                    j.at("residual_norm").get<double>(),
                    {}};
  const auto& d = j.at("diagnostics");
  sol.diagnostics.l_inf = d.at("l_inf").get<double>();
  sol.diagnostics.beta = d.at("beta").get<double>();
  sol.diagnostics.gamma = d.at("gamma").get<double>();
  sol.diagnostics.mean_shift = d.at("mean_shift").get<double>();
  return sol;
}

void save_solution(const std::string& path, const SolutionPoint& sol) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << solution_to_json(sol);
}

SolutionPoint load_solution(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return solution_from_json(ss.str());
}

void write_branch_csv(std::ostream& os, const Branch& branch) {
  os << "rho,alpha,amp_a2,l_inf,beta,gamma,residual_norm\n";
  for (const BranchPoint& p : branch.points) {
    os << fmt17(p.rho) << ',' << fmt17(p.alpha) << ',' << fmt17(p.amp) << ','
       << fmt17(p.sol.diagnostics.l_inf) << ',' << fmt17(p.sol.diagnostics.beta) << ','
       << fmt17(p.sol.diagnostics.gamma) << ',' << fmt17(p.sol.residual_norm) << '\n';
  }
}

std::string report_to_json(const VerificationReport& rep) {
  return report_json_obj(rep).dump(2) + "\n";
}

std::string reports_to_json(const std::vector<VerificationReport>& reps) {
  json arr = json::array();
  bool pass = true;
  for (const VerificationReport& r : reps) {
    arr.push_back(report_json_obj(r));
    pass = pass && r.all_pass();
  }
  return json{{"suites", arr}, {"pass", pass}}.dump(2) + "\n";
}

}  // namespace qcurve
