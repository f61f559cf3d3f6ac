#pragma once

#include <cstdint>
#include <random>

#include "qcurve/field.hpp"

namespace qcurve {

/// Deterministic uniform draws: identical across platforms for a given seed
/// (distribution code is ours, not the standard library's).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

/// a_k = scale * U[-1,1] * decay^k for k >= 1, zero mean (a_0 = 0).
inline SpectralField random_decaying_field(Rng& rng, const BasisSpec& spec, double scale,
                                           double decay) {
  Eigen::VectorXd a = Eigen::VectorXd::Zero(spec.K + 1);
  double f = 1.0;
  for (int k = 1; k <= spec.K; ++k) {
    f *= decay;
    a[k] = scale * rng.uniform(-1.0, 1.0) * f;
  }
  return SpectralField(spec, std::move(a));
}

}  // namespace qcurve
