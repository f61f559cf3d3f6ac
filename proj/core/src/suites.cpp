#include "qcurve/suites.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <mutex>
#include <thread>

#include "qcurve/rng.hpp"

namespace qcurve {

SolutionPoint closed_form_solution(int n, double a, int K) {
  const BasisSpec spec(n, K);
  const QuadratureRule rule = build_quadrature(n, 2 * K + n);
  const Eigen::VectorXd uv = (-(1.0 - a * rule.nodes.array()).log()).matrix();
  SpectralField u = analyze(rule, uv, spec);
  u.coeffs[0] = 0.0;  // zero-mean gauge; the equation is invariant under shifts
  return make_solution_point(EquationParams::from_alpha(n, 1.0), u, rule);
}

std::vector<SolutionPoint> branch_solutions(int n, const std::vector<double>& alphas,
                                            double tol) {
  const double hi = *std::max_element(alphas.begin(), alphas.end());
  BranchStart start = branch_switch(n, 2, -1, 2e-3);
  ContinuationOptions opts;
  opts.alpha_lo = 1e-9;
  opts.alpha_hi = hi + 0.004;
  opts.linf_stop = 8.0;
  Branch branch = continue_branch(start, opts);
  std::vector<SolutionPoint> out;
  out.reserve(alphas.size());
  for (double a : alphas) out.push_back(polish_at_alpha(branch, a, tol));
  return out;
}

namespace {

struct Battery {
  SolutionPoint trivial;
  SolutionPoint extremal;
  std::vector<SolutionPoint> branch;
};

const Battery& battery(int n) {
  static std::map<int, Battery> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Battery b;
  {
    const BasisSpec spec(n, 32);
    const QuadratureRule rule = build_quadrature(n, 2 * spec.K + n);
    b.trivial = make_solution_point(EquationParams::from_alpha(n, 0.8),
                                    SpectralField::zero(spec), rule);
  }
  b.extremal = closed_form_solution(n, 0.5);
  b.branch = branch_solutions(n, {0.2, 0.3, 0.45});
  return cache.emplace(n, std::move(b)).first->second;
}

QuadratureRule rule_for(const SolutionPoint& sol) {
  return build_quadrature(sol.params.n, 2 * sol.u.K() + sol.params.n);
}

VerificationReport with_prefix(VerificationReport rep, const std::string& tag) {
  for (CheckCase& c : rep.cases) c.id = tag + "/" + c.id;
  return rep;
}

SpectralField random_boundary_zero_poly(Rng& rng, int n, int inner_degree) {
  Eigen::VectorXd p(inner_degree + 1);
  for (int k = 0; k <= inner_degree; ++k) p[k] = rng.uniform(-1.0, 1.0);
  Eigen::VectorXd g = multiply_one_minus_x2_coeffs(n, p);
  return SpectralField(BasisSpec(n, static_cast<int>(g.size()) - 1), std::move(g));
}

VerificationReport run_appendix(int n, int trials, std::uint64_t seed) {
  VerificationReport rep;
  rep.suite = (n == 6) ? "appendixA" : "appendixB";
  rep.seed = seed;
  Rng rng(seed);
  const int inner = (n == 6) ? 8 : 6;  // G degree 10 (n=6) resp. 8 (n=8)
  const QuadratureRule leg = build_quadrature(2, 3 * (inner + 2) + 16);
  for (int t = 0; t < trials; ++t) {
    const SpectralField G = random_boundary_zero_poly(rng, n, inner);
    VerificationReport one =
        (n == 6) ? check_appendix_A(G, leg) : check_appendix_B(G, leg);
    rep.append(with_prefix(std::move(one), "trial" + std::to_string(t)));
  }
  return rep;
}

VerificationReport run_decomp(int n, int trials, std::uint64_t seed) {
  VerificationReport rep;
  rep.suite = "decomp";
  rep.seed = seed;
  Rng rng(seed);
  const BasisSpec spec(n, 16);
  const QuadratureRule leg = build_quadrature(2, 2 * (spec.K + n) + 8);
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXd d(spec.K + 1);
    for (int k = 0; k <= spec.K; ++k) d[k] = rng.uniform(-1.0, 1.0);
    rep.append(with_prefix(check_decompositions(SpectralField(spec, d), leg, n),
                           "trial" + std::to_string(t)));
  }
  return rep;
}

VerificationReport run_solution_suite(const std::string& name, int n) {
  const Battery& b = battery(n);
  VerificationReport rep;
  rep.suite = name;
  auto add = [&](const SolutionPoint& sol, const std::string& tag) {
    const QuadratureRule rule = rule_for(sol);
    if (name == "lemma")
      rep.append(with_prefix(check_lemma_equality(sol, rule), tag));
    else if (name == "keyeq")
      rep.append(with_prefix(check_key_equation_and_estimates(sol, rule), tag));
    else if (name == "gradient")
      rep.append(with_prefix(check_gradient_bounds(sol), tag));
    else if (name == "momenta")
      rep.append(with_prefix(check_momenta(sol, rule), tag));
  };
  add(b.trivial, "zero");
  add(b.extremal, "extremal");
  for (size_t i = 0; i < b.branch.size(); ++i)
    add(b.branch[i], "branch_alpha" + std::to_string(b.branch[i].params.alpha).substr(0, 4));
  return rep;
}

}  // namespace

std::vector<std::string> suite_names(int n) {
  std::vector<std::string> names;
  if (n == 6) names.push_back("appendixA");
  if (n == 8) names.push_back("appendixB");
  for (const char* s : {"decomp", "lemma", "keyeq", "gradient", "momenta", "beckner", "szego"})
    names.push_back(s);
  return names;
}

VerificationReport run_suite(const std::string& name, int n, int trials, std::uint64_t seed) {
  if (name == "appendixA") {
    if (n != 6) throw std::invalid_argument("suite appendixA requires --n 6");
    return run_appendix(6, trials, seed);
  }
  if (name == "appendixB") {
    if (n != 8) throw std::invalid_argument("suite appendixB requires --n 8");
    return run_appendix(8, trials, seed);
  }
  if (name == "decomp") return run_decomp(n, trials, seed);
  if (name == "lemma" || name == "keyeq" || name == "gradient" || name == "momenta")
    return run_solution_suite(name, n);
  if (name == "beckner" || name == "szego") {
    VerificationReport full = sampled_inequalities(n, trials, seed);
    VerificationReport rep;
    rep.suite = name;
    rep.seed = seed;
    for (const CheckCase& c : full.cases) {
      const bool is_szego = c.id.find("szego") != std::string::npos;
      if ((name == "szego") == is_szego) rep.cases.push_back(c);
    }
    return rep;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<VerificationReport> run_suites(const std::vector<std::string>& names, int n,
                                           int trials, std::uint64_t seed, int threads) {
  // the solution battery is shared; build it once up front so workers only read
  for (const std::string& s : names)
    if (s == "lemma" || s == "keyeq" || s == "gradient" || s == "momenta") {
      battery(n);
      break;
    }
  std::vector<VerificationReport> out(names.size());
  std::vector<std::future<void>> running;
  size_t next = 0;
  const size_t width = std::max(1, threads);
  while (next < names.size() || !running.empty()) {
    while (next < names.size() && running.size() < width) {
      const size_t i = next++;
      running.push_back(std::async(std::launch::async, [&, i] {
        out[i] = run_suite(names[i], n, trials, seed);
      }));
    }
    running.front().get();
    running.erase(running.begin());
  }
  return out;
}

int default_thread_count() {
  if (const char* env = std::getenv("QCURVE_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace qcurve
