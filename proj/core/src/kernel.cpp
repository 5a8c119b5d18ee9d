#include "wigner/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "wigner/log.hpp"

namespace wigner {

namespace {

using std::complex;

void check_xi_grid(const XiGrid& xi) {
  if (xi.n < 8 || (xi.n & (xi.n - 1)) != 0) {
    throw std::invalid_argument("kernel: xi grid size must be a power of two >= 8");
  }
  if (!(xi.dxi > 0.0)) {
    throw std::invalid_argument("kernel: xi grid spacing must be positive");
  }
}

double trapezoid(const std::vector<double>& f, double dk) {
  double s = 0.0;
  for (double v : f) s += v;
  s -= 0.5 * (f.front() + f.back());
  return s * dk;
}

cdouble trapezoid(const std::vector<cdouble>& f, double dk) {
  cdouble s = 0.0;
  for (const cdouble& v : f) s += v;
  s -= 0.5 * (f.front() + f.back());
  return s * dk;
}

// Linear interpolation of samples on the uniform k grid; zero outside.
template <typename T>
T sample_at(const std::vector<double>& k_grid, const std::vector<T>& f, double k) {
  const double dk = k_grid[1] - k_grid[0];
  const double u = (k - k_grid.front()) / dk;
  if (u < 0.0 || u > static_cast<double>(k_grid.size() - 1)) return T{};
  const int i = std::min(static_cast<int>(u), static_cast<int>(k_grid.size()) - 2);
  const double t = u - i;
  return f[i] * (1.0 - t) + f[i + 1] * t;
}

void validate_tabulated(const TabulatedEnv& env, const KernelOptions& opts, const XiGrid& xi) {
  const std::size_t n = env.k_grid.size();
  if (n < 2) throw std::invalid_argument("TabulatedEnv: k_grid needs at least two samples");
  if (env.r_sq.size() != n || env.chi_hat.size() != n) {
    throw std::invalid_argument("TabulatedEnv: r_sq and chi_hat must match k_grid length");
  }
  if (!env.t_of_k.empty() && env.t_of_k.size() != n) {
    throw std::invalid_argument("TabulatedEnv: t_of_k must be empty or match k_grid length");
  }
  const double dk = env.k_grid[1] - env.k_grid[0];
  if (!(dk > 0.0)) throw std::invalid_argument("TabulatedEnv: k_grid must be increasing");
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double step = env.k_grid[i + 1] - env.k_grid[i];
    if (std::abs(step - dk) > 1e-9 * dk) {
      throw std::invalid_argument("TabulatedEnv: k_grid must be uniform");
    }
  }
  for (double r : env.r_sq) {
    if (!(r >= 0.0 && r <= 1.0 + 1e-12)) {
      throw std::invalid_argument("TabulatedEnv: |r(k)|^2 must lie in [0, 1]");
    }
  }
  std::vector<double> chi2(n);
  for (std::size_t i = 0; i < n; ++i) chi2[i] = std::norm(env.chi_hat[i]);
  const double norm = trapezoid(chi2, dk);
  if (std::abs(norm - 1.0) > opts.chi_norm_tol) {
    throw std::invalid_argument("TabulatedEnv: int |chi_hat|^2 dk = " + std::to_string(norm) +
                                " violates unit normalization beyond tolerance");
  }
  // e^{2 i k xi} must be resolved at the largest |xi|: >= 4 samples per period.
  const double xi_max = 0.5 * xi.n * xi.dxi;
  const double dk_max = M_PI / (4.0 * xi_max);
  if (dk > dk_max) {
    throw std::invalid_argument(
        "TabulatedEnv: k grid spacing " + std::to_string(dk) +
        " does not resolve the e^{2ik xi} oscillation at |xi|_max (need <= " +
        std::to_string(dk_max) + ")");
  }
}

// Lambda(xi) = int (1 - e^{2ik xi}) |r|^2 |chi_hat|^2 dk, trapezoid rule.
// `stride` subsamples the k grid for the refinement error estimate.
cdouble lambda_quadrature(const TabulatedEnv& env, double xi, std::size_t stride) {
  const double dk = (env.k_grid[1] - env.k_grid[0]) * stride;
  std::vector<cdouble> f;
  f.reserve(env.k_grid.size() / stride + 1);
  for (std::size_t i = 0; i < env.k_grid.size(); i += stride) {
    const double k = env.k_grid[i];
    const double weight = env.r_sq[i] * std::norm(env.chi_hat[i]);
    f.push_back(weight * (1.0 - std::polar(1.0, 2.0 * k * xi)));
  }
  return trapezoid(f, dk);
}

// deriv_order 0 gives Gamma(x); 1 gives Gamma'(x) (extra 2ik factor).
cdouble gamma_quadrature(const TabulatedEnv& env, double x, int deriv_order = 0) {
  const double dk = env.k_grid[1] - env.k_grid[0];
  std::vector<cdouble> f(env.k_grid.size());
  for (std::size_t i = 0; i < env.k_grid.size(); ++i) {
    const double k = env.k_grid[i];
    // Only |r|^2 is tabulated; r(-k) is taken as the real positive root.
    const double r_minus = std::sqrt(std::max(0.0, sample_at(env.k_grid, env.r_sq, -k)));
    const cdouble chi_minus = sample_at(env.k_grid, env.chi_hat, -k);
    f[i] = std::polar(1.0, 2.0 * k * x) * r_minus * env.t_of_k[i] *
           std::conj(chi_minus) * env.chi_hat[i];
    if (deriv_order == 1) f[i] *= cdouble(0.0, 2.0 * k);
  }
  return trapezoid(f, dk);
}

}  // namespace

std::vector<double> DecoherenceKernel::gamma_shift(const std::vector<double>& x) const {
  std::vector<double> out(x.size(), 0.0);
  if (!has_gamma_shift_ || !env_) return out;
  double max_im = 0.0, max_abs = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const cdouble g = gamma_quadrature(*env_, x[i]);
    out[i] = g.real();
    max_im = std::max(max_im, std::abs(g.imag()));
    max_abs = std::max(max_abs, std::abs(g));
  }
  if (max_im > 1e-8 * std::max(1.0, max_abs)) {
    log::warn("Gamma has significant imaginary part (max " + std::to_string(max_im) +
              "); using Re Gamma for the potential shift");
  }
  return out;
}

double DecoherenceKernel::gamma_shift_at(double x) const {
  if (!has_gamma_shift_ || !env_) return 0.0;
  return gamma_quadrature(*env_, x).real();
}

double DecoherenceKernel::gamma_shift_derivative_at(double x) const {
  if (!has_gamma_shift_ || !env_) return 0.0;
  return gamma_quadrature(*env_, x, 1).real();
}

DecoherenceKernel build_kernel(const ScatteringEnvironment& env, const XiGrid& xi_grid,
                               double hbar, const KernelOptions& opts) {
  check_xi_grid(xi_grid);
  if (!(hbar > 0.0)) throw std::invalid_argument("build_kernel: hbar must be positive");

  DecoherenceKernel k;
  k.xi_ = xi_grid;
  k.hbar_ = hbar;
  k.lambda_.resize(xi_grid.n);
  k.gamma_shift_samples_.assign(xi_grid.n, cdouble{0.0, 0.0});

  if (const auto* pg = std::get_if<PeakedGaussianEnv>(&env)) {
    if (!(pg->sigma > 0.0)) throw std::invalid_argument("PeakedGaussianEnv: sigma must be positive");
    if (!(pg->r0_sq >= 0.0 && pg->r0_sq <= 1.0)) {
      throw std::invalid_argument("PeakedGaussianEnv: r0_sq must lie in [0, 1]");
    }
    for (int l = 0; l < xi_grid.n; ++l) {
      const double xi = xi_grid.xi(l);
      const cdouble ph = std::exp(cdouble(-xi * xi / (2.0 * pg->sigma * pg->sigma),
                                          2.0 * pg->k0 * xi));
      k.lambda_[l] = pg->r0_sq * (1.0 - ph);
    }
    k.lambda1_ = 2.0 * pg->k0 * pg->r0_sq;
    k.lambda2_ = pg->r0_sq / (2.0 * pg->sigma * pg->sigma);
  } else {
    const auto& tab = std::get<TabulatedEnv>(env);
    validate_tabulated(tab, opts, xi_grid);

    double quad_err = 0.0, scale = 0.0;
    for (int l = 0; l < xi_grid.n; ++l) {
      const double xi = xi_grid.xi(l);
      k.lambda_[l] = lambda_quadrature(tab, xi, 1);
      scale = std::max(scale, std::abs(k.lambda_[l]));
      if (tab.k_grid.size() >= 8) {
        quad_err = std::max(quad_err, std::abs(k.lambda_[l] - lambda_quadrature(tab, xi, 2)));
      }
    }
    if (quad_err > opts.quad_error_tol * std::max(1.0, scale)) {
      throw std::runtime_error("build_kernel: trapezoid quadrature not converged, estimated error " +
                               std::to_string(quad_err) + "; refine the k grid");
    }

    const double dk = tab.k_grid[1] - tab.k_grid[0];
    std::vector<double> f1(tab.k_grid.size()), f2(tab.k_grid.size());
    for (std::size_t i = 0; i < tab.k_grid.size(); ++i) {
      const double kk = tab.k_grid[i];
      const double weight = tab.r_sq[i] * std::norm(tab.chi_hat[i]);
      f1[i] = kk * weight;
      f2[i] = kk * kk * weight;
    }
    k.lambda1_ = 2.0 * trapezoid(f1, dk);
    k.lambda2_ = 2.0 * trapezoid(f2, dk);

    if (tab.t_of_k.empty()) {
      log::warn("TabulatedEnv has no t(k); taking Gamma = 0");
    } else {
      k.env_ = tab;
      k.has_gamma_shift_ = true;
      for (int l = 0; l < xi_grid.n; ++l) {
        k.gamma_shift_samples_[l] = gamma_quadrature(tab, xi_grid.xi(l));
      }
    }
  }

  k.gamma_ = centered_wigner_transform(k.lambda_, xi_grid.dxi, hbar);
  return k;
}

DecoherenceKernel lorentzian_kernel(double lambda_c, double p0, const XiGrid& xi_grid,
                                    double hbar) {
  check_xi_grid(xi_grid);
  if (!(lambda_c > 0.0)) throw std::invalid_argument("lorentzian_kernel: coherence length must be positive");
  if (!(hbar > 0.0)) throw std::invalid_argument("lorentzian_kernel: hbar must be positive");

  DecoherenceKernel k;
  k.xi_ = xi_grid;
  k.hbar_ = hbar;
  k.lambda_.resize(xi_grid.n);
  k.gamma_shift_samples_.assign(xi_grid.n, cdouble{0.0, 0.0});
  for (int l = 0; l < xi_grid.n; ++l) {
    const double xi = xi_grid.xi(l);
    k.lambda_[l] = 1.0 - std::exp(cdouble(-std::abs(xi) / lambda_c, p0 * xi / hbar));
  }
  k.lambda1_ = p0 / hbar;
  // The Lorentzian has no finite second moment; no diffusion constant exists.
  k.lambda2_ = std::numeric_limits<double>::quiet_NaN();
  k.gamma_ = centered_wigner_transform(k.lambda_, xi_grid.dxi, hbar);
  return k;
}

QuadraticApprox quadratic_approx(const DecoherenceKernel& kernel, double tol) {
  const auto& lam = kernel.lambda();
  const int c = kernel.xi_grid().center();
  const double h = kernel.xi_grid().dxi;
  if (c < 2 || c + 2 >= static_cast<int>(lam.size())) {
    throw std::invalid_argument("quadratic_approx: xi grid too small for finite differences");
  }
  // Fourth-order centered stencils at xi = 0.
  const cdouble d1 =
      (-lam[c + 2] + 8.0 * lam[c + 1] - 8.0 * lam[c - 1] + lam[c - 2]) / (12.0 * h);
  const cdouble d2 = (-lam[c + 2] + 16.0 * lam[c + 1] - 30.0 * lam[c] + 16.0 * lam[c - 1] -
                      lam[c - 2]) / (12.0 * h * h);

  QuadraticApprox q;
  q.lambda1 = kernel.lambda1();
  q.lambda2 = kernel.lambda2();
  q.fd_lambda1 = (cdouble(0.0, 1.0) * d1).real();
  q.fd_lambda2 = 0.5 * d2.real();
  auto close = [tol](double a, double b) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
  };
  q.consistent_drift = close(q.lambda1, q.fd_lambda1);
  q.consistent_diffusion = close(q.lambda2, q.fd_lambda2);
  return q;
}

}  // namespace wigner
