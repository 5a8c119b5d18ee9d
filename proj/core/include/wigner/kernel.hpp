#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "wigner/fft.hpp"
#include "wigner/grids.hpp"
#include "wigner/scattering.hpp"

namespace wigner {

struct KernelOptions {
  double chi_norm_tol = 1e-6;    // allowed deviation of int |chi_hat|^2 dk from 1
  double quad_error_tol = 1e-6;  // allowed relative trapezoid-refinement error
};

// Discretized decoherence functions Lambda(xi), Gamma, and the momentum
// kernel gamma(p) obtained as the Wigner transform of Lambda, together with
// the drift/diffusion constants Lambda1, Lambda2.
//
// Immutable after construction; safe to share across threads read-only.
class DecoherenceKernel {
 public:
  const XiGrid& xi_grid() const { return xi_; }
  double hbar() const { return hbar_; }

  // Lambda on the centered xi grid (index l <-> xi = (l - n/2) dxi).
  const std::vector<cdouble>& lambda() const { return lambda_; }
  // gamma on the conjugate centered momentum grid.
  const std::vector<cdouble>& gamma() const { return gamma_; }
  double conjugate_dp() const { return 2.0 * M_PI * hbar_ / (xi_.n * xi_.dxi); }
  double conjugate_p(int j) const { return (j - xi_.n / 2) * conjugate_dp(); }

  double lambda1() const { return lambda1_; }
  double lambda2() const { return lambda2_; }  // NaN for the Lorentzian kernel

  // Gamma potential shift, Re Gamma(x), evaluated at arbitrary positions.
  // Identically zero except for tabulated environments carrying t(k). The
  // vector overload warns once when |Im Gamma| is significant.
  bool has_gamma_shift() const { return has_gamma_shift_; }
  std::vector<double> gamma_shift(const std::vector<double>& x) const;
  double gamma_shift_at(double x) const;
  double gamma_shift_derivative_at(double x) const;

  // Gamma samples on the xi grid (for CSV inspection dumps).
  const std::vector<cdouble>& gamma_shift_samples() const { return gamma_shift_samples_; }

 private:
  friend DecoherenceKernel build_kernel(const ScatteringEnvironment&, const XiGrid&,
                                        double, const KernelOptions&);
  friend DecoherenceKernel lorentzian_kernel(double, double, const XiGrid&, double);
  DecoherenceKernel() = default;

  XiGrid xi_;
  double hbar_ = 1.0;
  std::vector<cdouble> lambda_;
  std::vector<cdouble> gamma_;
  std::vector<cdouble> gamma_shift_samples_;
  double lambda1_ = 0.0;
  double lambda2_ = 0.0;
  bool has_gamma_shift_ = false;
  std::optional<TabulatedEnv> env_;  // kept for Gamma evaluation off the xi grid
};

// Constructs Lambda, Gamma, gamma from scattering data (quadrature) or the
// peaked-gaussian closed form
//   Lambda(xi) = |r(k0)|^2 (1 - exp(2 i k0 xi - xi^2 / (2 sigma^2))),
// with Lambda1 = 2 k0 |r(k0)|^2 and Lambda2 = |r(k0)|^2 / (2 sigma^2).
DecoherenceKernel build_kernel(const ScatteringEnvironment& env, const XiGrid& xi_grid,
                               double hbar, const KernelOptions& opts = {});

// Finite-coherence-length kernel: 1 - Lambda(xi) = exp(-|xi|/lambda_c) with an
// extra phase exp(i p0 xi / hbar) when the environment carries drift momentum
// p0. Its momentum image is the Lorentzian of half-width hbar/lambda_c
// centered at p - p0. Lambda2 does not exist for this kernel (stored NaN).
DecoherenceKernel lorentzian_kernel(double lambda_c, double p0, const XiGrid& xi_grid,
                                    double hbar);

// Drift/diffusion constants recovered from the stored Lambda samples by
// centered finite differences at xi = 0, checked against the construction
// values. lambda1/lambda2 are the stored (exact) constants; fd_* are the
// finite-difference estimates i Lambda'(0) and Lambda''(0)/2.
struct QuadraticApprox {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double fd_lambda1 = 0.0;
  double fd_lambda2 = 0.0;
  bool consistent_drift = false;
  bool consistent_diffusion = false;
};

// tol is relative to max(|lambda1|, |lambda2|, floor). The drifted
// peaked-gaussian kernel stores the diffusive constant |r0|^2/(2 sigma^2),
// which deviates from the raw Taylor coefficient by 2 k0^2 |r0|^2; the report
// flags that case rather than failing.
QuadraticApprox quadratic_approx(const DecoherenceKernel& kernel, double tol = 1e-3);

}  // namespace wigner
