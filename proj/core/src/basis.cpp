#include "qcurve/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcurve {

BasisSpec::BasisSpec(int n_, int K_) : n(n_), K(K_) {
  if (n < 2) throw std::invalid_argument("BasisSpec: sphere dimension n must be >= 2");
  if (K < 2) throw std::invalid_argument("BasisSpec: truncation degree K must be >= 2");
}

ModeEigenvalues eigenvalues(int n, int k) {
  if (k < 0) throw std::invalid_argument("eigenvalues: k must be >= 0");
  double lam = 1.0;
  for (int s = 0; s < n; ++s) lam *= static_cast<double>(k + s);
  if (!std::isfinite(lam))
    throw std::overflow_error("eigenvalues: lambda_k overflows double at k=" + std::to_string(k));
  return {static_cast<double>(k) * (k + n - 1.0), lam};
}

double factorial_as_double(int m) {
  double f = 1.0;
  for (int s = 2; s <= m; ++s) f *= s;
  return f;
}

double weight_integral(int n) {
  // S(2) = 2, S(3) = pi/2, S(n) = S(n-2) * (n-2)/(n-1)
  double s = (n % 2 == 0) ? 2.0 : M_PI / 2.0;
  for (int m = (n % 2 == 0) ? 4 : 5; m <= n; m += 2) s *= (m - 2.0) / (m - 1.0);
  return s;
}

double sphere_average_factor(int n) { return 1.0 / weight_integral(n); }

double basis_norm_sq(int n, int k) {
  if (k < 0) throw std::invalid_argument("basis_norm_sq: k must be >= 0");
  if (k == 0) return weight_integral(n);
  // S(n) * (n-1)! * lambda_bar_k / ((n+2k-1) * lambda_k), as a product of
  // small ratios so that it stays finite far beyond the overflow of lambda_k.
  double r = 1.0 / static_cast<double>(k);  // pairs with the s=0 factor of lambda_k
  for (int s = 1; s < n; ++s) r *= static_cast<double>(s) / (k + s);
  const double lambda_bar = static_cast<double>(k) * (k + n - 1.0);
  return weight_integral(n) * r * lambda_bar / (n + 2.0 * k - 1.0);
}

double gegenbauer_eval(const BasisSpec& spec, int k, double x) {
  if (k < 0 || k > spec.K)
    throw std::invalid_argument("gegenbauer_eval: degree k outside [0, K]");
  if (std::abs(x) > 1.0)
    throw std::invalid_argument("gegenbauer_eval: point outside [-1, 1]");
  const int n = spec.n;
  double pm = 1.0;  // Chat_0
  if (k == 0) return pm;
  double p = x;  // Chat_1
  for (int j = 1; j < k; ++j) {
    const double pn = ((2.0 * j + n - 1.0) * x * p - j * pm) / (j + n - 1.0);
    pm = p;
    p = pn;
  }
  return p;
}

Eigen::VectorXd derivative_coeffs(int n, const Eigen::VectorXd& a) {
  const int K = static_cast<int>(a.size()) - 1;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(std::max(K, 1) + 1);
  // backward recurrence obtained from (2k+n-1) Chat_k / s_k = C_{k+1}' - C_{k-1}'
  for (int j = K; j >= 1; --j) {
    double v = (2.0 * j + n - 3.0) * (static_cast<double>(j) / (j + n - 2.0)) * a[j];
    if (j + 1 <= K)
      v += (2.0 * j + n - 3.0) / (2.0 * j + n + 1.0) *
           (static_cast<double>(j) * (j + 1.0) / ((j + n - 2.0) * (j + n - 1.0))) * c[j + 1];
    c[j - 1] = v;
  }
  return c.head(std::max(K, 1));
}

Eigen::VectorXd multiply_x_coeffs(int n, const Eigen::VectorXd& a) {
  const int K = static_cast<int>(a.size()) - 1;
  Eigen::VectorXd o = Eigen::VectorXd::Zero(K + 2);
  for (int k = 0; k <= K; ++k) {
    o[k + 1] += a[k] * (k + n - 1.0) / (2.0 * k + n - 1.0);
    if (k >= 1) o[k - 1] += a[k] * static_cast<double>(k) / (2.0 * k + n - 1.0);
  }
  return o;
}

Eigen::VectorXd multiply_one_minus_x2_coeffs(int n, const Eigen::VectorXd& a) {
  const Eigen::VectorXd xx = multiply_x_coeffs(n, multiply_x_coeffs(n, a));
  Eigen::VectorXd o = -xx;
  o.head(a.size()) += a;
  return o;
}

Eigen::VectorXd gradient_coeffs(int n, const Eigen::VectorXd& a) {
  const int K = static_cast<int>(a.size()) - 1;
  Eigen::VectorXd d = Eigen::VectorXd::Zero(K + 2);
  for (int k = 1; k <= K; ++k) {
    const double f = k * (k + n - 1.0) / (2.0 * k + n - 1.0);
    d[k - 1] += a[k] * f;
    d[k + 1] -= a[k] * f;
  }
  return d;
}

int effective_degree(const Eigen::VectorXd& c, double rel_floor) {
  const double m = c.cwiseAbs().maxCoeff();
  if (m == 0.0) return 0;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
    if (std::abs(c[k]) > rel_floor * m) return k;
  return 0;
}

}  // namespace qcurve
