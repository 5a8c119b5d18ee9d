#pragma once

namespace wigner {

// Exponent parameters of the gaussian phase-space profile
//   w(x, p) = exp(-(A p^2 + B p x + C x^2 + D)).
// Normalizable iff 4AC - B^2 > 0 (then A > 0 and C > 0); total mass is
// 2 pi exp(-D) / sqrt(4AC - B^2).
struct GaussianParams {
  double A = 1.0;
  double B = 0.0;
  double C = 1.0;
  double D = 0.0;

  double discriminant() const { return 4.0 * A * C - B * B; }
  bool normalizable() const { return discriminant() > 0.0 && A > 0.0 && C > 0.0; }
  double mass() const;  // closed form; throws if not normalizable

  // Quadratic-form coefficients after free streaming x -> x - p t / m.
  GaussianParams free_streamed(double t, double m) const;
};

struct CoherenceMetrics {
  double momentum_spread;   // 1 / sqrt(2A)
  double position_spread;   // 1 / sqrt(2C)
  double coherence_length;  // hbar sqrt(2A)
};

CoherenceMetrics coherence_metrics(const GaussianParams& params, double hbar);

}  // namespace wigner
