#pragma once

#include <complex>
#include <variant>
#include <vector>

namespace wigner {

// Closed-form surrogate: the light particle is a gaussian wave packet with
// mean wavenumber k0 and position spread sigma, and the reflection
// probability is flat at |r(k0)|^2 across the packet.
struct PeakedGaussianEnv {
  double k0 = 0.0;
  double sigma = 1.0;
  double r0_sq = 1.0;
};

// Tabulated scattering data on a uniform wavenumber grid.
//   r_sq[i]    = |r(k_i)|^2, in [0, 1]
//   t_of_k[i]  = t(k_i)   (may be empty: the Gamma shift is then taken as 0)
//   chi_hat[i] = light-particle momentum wave function, int |chi_hat|^2 dk = 1
struct TabulatedEnv {
  std::vector<double> k_grid;
  std::vector<double> r_sq;
  std::vector<std::complex<double>> t_of_k;   // optional (empty allowed)
  std::vector<std::complex<double>> chi_hat;
};

using ScatteringEnvironment = std::variant<PeakedGaussianEnv, TabulatedEnv>;

}  // namespace wigner
