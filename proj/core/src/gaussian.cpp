#include "wigner/gaussian.hpp"

#include <cmath>
#include <stdexcept>

namespace wigner {

double GaussianParams::mass() const {
  if (!normalizable()) {
    throw std::invalid_argument("GaussianParams: not normalizable (4AC - B^2 <= 0)");
  }
  return 2.0 * M_PI * std::exp(-D) / std::sqrt(discriminant());
}

GaussianParams GaussianParams::free_streamed(double t, double m) const {
  const double s = t / m;
  return GaussianParams{A - B * s + C * s * s, B - 2.0 * C * s, C, D};
}

CoherenceMetrics coherence_metrics(const GaussianParams& params, double hbar) {
  if (!(params.A > 0.0) || !(params.C > 0.0)) {
    throw std::invalid_argument("coherence_metrics: requires A > 0 and C > 0");
  }
  return CoherenceMetrics{1.0 / std::sqrt(2.0 * params.A),
                          1.0 / std::sqrt(2.0 * params.C),
                          hbar * std::sqrt(2.0 * params.A)};
}

}  // namespace wigner
