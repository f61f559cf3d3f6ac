#include "qcurve/field.hpp"

#include <cmath>
#include <stdexcept>

namespace qcurve {

SpectralField::SpectralField(BasisSpec s, Eigen::VectorXd c) : spec(s), coeffs(std::move(c)) {
  if (coeffs.size() != spec.K + 1)
    throw std::invalid_argument("SpectralField: coefficient vector must have K+1 entries");
}

SpectralField SpectralField::zero(BasisSpec s) {
  return SpectralField(s, Eigen::VectorXd::Zero(s.K + 1));
}

Eigen::MatrixXd basis_matrix(const BasisSpec& spec, const Eigen::VectorXd& points) {
  const int n = spec.n, K = spec.K;
  Eigen::MatrixXd B(points.size(), K + 1);
  B.col(0).setOnes();
  B.col(1) = points;
  for (int k = 1; k < K; ++k)
    B.col(k + 1) =
        ((2.0 * k + n - 1.0) * points.cwiseProduct(B.col(k)) - static_cast<double>(k) * B.col(k - 1)) /
        (k + n - 1.0);
  return B;
}

SpectralField analyze(const QuadratureRule& rule, const Eigen::VectorXd& values,
                      const BasisSpec& spec) {
  if (rule.n != spec.n) throw std::invalid_argument("analyze: rule/spec dimension mismatch");
  if (values.size() != rule.Q) throw std::invalid_argument("analyze: values/node count mismatch");
  if (rule.Q < spec.K + 1)
    throw std::invalid_argument("analyze: rule.Q must be >= K+1 for exact projection");
  const Eigen::MatrixXd B = basis_matrix(spec, rule.nodes);
  Eigen::VectorXd a = B.transpose() * rule.weights.cwiseProduct(values);
  for (int k = 0; k <= spec.K; ++k) a[k] /= basis_norm_sq(spec.n, k);
  return SpectralField(spec, std::move(a));
}

Eigen::VectorXd synthesize(const SpectralField& field, const Eigen::VectorXd& points) {
  const int n = field.n(), K = field.K();
  const Eigen::VectorXd& a = field.coeffs;
  Eigen::VectorXd out(points.size());
  for (Eigen::Index q = 0; q < points.size(); ++q) {
    const double x = points[q];
    if (std::abs(x) > 1.0) throw std::invalid_argument("synthesize: point outside [-1, 1]");
    double pm = 1.0, p = x;
    double acc = a[0] + a[1] * x;
    for (int k = 1; k < K; ++k) {
      const double pn = ((2.0 * k + n - 1.0) * x * p - k * pm) / (k + n - 1.0);
      pm = p;
      p = pn;
      acc += a[k + 1] * p;
    }
    out[q] = acc;
  }
  return out;
}

SpectralField derivative(const SpectralField& field) {
  const Eigen::VectorXd c = derivative_coeffs(field.n(), field.coeffs);
  const int Kd = std::max<int>(2, static_cast<int>(c.size()) - 1);
  Eigen::VectorXd padded = Eigen::VectorXd::Zero(Kd + 1);
  padded.head(c.size()) = c;
  return SpectralField(BasisSpec(field.n(), Kd), std::move(padded));
}

SpectralField g_map(const SpectralField& u, const QuadratureRule& rule) {
  if (rule.n != u.n()) throw std::invalid_argument("g_map: rule/field dimension mismatch");
  if (rule.Q < u.K() + 2)
    throw std::invalid_argument("g_map: rule.Q must be >= K+2 to resolve degree K+1");
  const Eigen::VectorXd du = derivative_coeffs(u.n(), u.coeffs);
  const BasisSpec dspec(u.n(), std::max<int>(2, static_cast<int>(du.size()) - 1));
  Eigen::VectorXd dc = Eigen::VectorXd::Zero(dspec.K + 1);
  dc.head(du.size()) = du;
  const Eigen::VectorXd upv = synthesize(SpectralField(dspec, dc), rule.nodes);
  const Eigen::VectorXd gv =
      (Eigen::VectorXd::Ones(rule.Q) - rule.nodes.cwiseProduct(rule.nodes)).cwiseProduct(upv);
  return analyze(rule, gv, BasisSpec(u.n(), u.K() + 1));
}

SpectralField g_map_banded(const SpectralField& u) {
  Eigen::VectorXd d = gradient_coeffs(u.n(), u.coeffs);
  return SpectralField(BasisSpec(u.n(), u.K() + 1), std::move(d));
}

double fluctuation_norm_sq(const SpectralField& u) {
  double s = 0.0;
  for (int k = u.K(); k >= 1; --k) s += basis_norm_sq(u.n(), k) * u.coeffs[k] * u.coeffs[k];
  return s;
}

}  // namespace qcurve
