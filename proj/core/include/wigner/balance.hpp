#pragma once

#include <span>
#include <vector>

#include "wigner/moments.hpp"
#include "wigner/potential.hpp"
#include "wigner/solver.hpp"

namespace wigner {

struct BalanceParams {
  double m = 0.4;
  double tau = 1.0;
  double hbar = 1.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double eta = 0.0;
};

// Residuals of the moment balance laws evaluated from three consecutive
// snapshots (centered time differences at the middle one):
//   r_N = dN/dt + dJ/dx
//   r_J = dJ/dt + d(flux_J)/dx + V' N / m - hbar Lambda1 N / (m tau) + eta J
//   r_E = dE/dt + d(flux_E)/dx + V' J - hbar Lambda1 J / tau
//         - hbar^2 Lambda2 N / (m tau) + 2 eta E
// The energy flux is never closed; flux_E comes from the kinetic solution.
struct BalanceResidual {
  std::vector<double> r_N, r_J, r_E;
  double l2_N, max_N, l2_J, max_J, l2_E, max_E;
  double dt_used, dx_used;
  double time;
};

BalanceResidual residuals(const MomentFields& prev, const MomentFields& mid,
                          const MomentFields& next, const BalanceParams& params,
                          std::span<const double> v_prime);

// Residuals at every interior snapshot of a time-ordered sequence.
std::vector<BalanceResidual> residual_series(std::span<const MomentFields> snapshots,
                                             const BalanceParams& params,
                                             std::span<const double> v_prime);

// Deviations of the p-moments of Theta[V] w from the identities
// (0, V' N / m, V' J), normalized by the scale of the first-moment identity.
struct ThetaMomentCheck {
  double dev0, dev1, dev2;
};

ThetaMomentCheck theta_moments_check(const WignerState& state, const PotentialSpec& potential,
                                     double m);

}  // namespace wigner
