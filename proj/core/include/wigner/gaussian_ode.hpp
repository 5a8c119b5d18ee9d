#pragma once

#include <optional>
#include <vector>

#include "wigner/gaussian.hpp"

namespace wigner {

// Coefficients of the gaussian-ansatz reduction of the Wigner-Fokker-Planck
// equation with harmonic potential and Caldeira-Leggett friction.
// lambda0 = hbar^2 Lambda2.
struct OdeParams {
  double m = 0.4;
  double tau = 1.0;
  double lambda0 = 1.0;
  double kappa = 1.0;
  double eta = 0.0;
  double hbar = 1.0;
};

struct OdeDerivative {
  double dA, dB, dC, dD;
};

struct TrajectoryPoint {
  double t;
  double A, B, C, D;
  double exp_minus_D() const;
};

using Trajectory = std::vector<TrajectoryPoint>;

void validate(const OdeParams& p);

// Right-hand side of the coupled system for (A, B, C, D); eta = 0 recovers
// the frictionless system.
OdeDerivative ode_rhs(const OdeParams& p, const GaussianParams& s);

// Classic fixed-step fourth-order Runge-Kutta; the trajectory is sampled
// every `sample_every` steps (first and last points always included).
Trajectory integrate(const OdeParams& p, const GaussianParams& init, double t_end, double dt,
                     int sample_every = 1);

struct Equilibrium {
  double A0, B0, C0;
};

// (tau eta / 2 lambda0, 0, m tau kappa eta / 2 lambda0) for eta > 0 and
// lambda0 > 0; the origin for eta = 0; absent when lambda0 = 0 with eta > 0
// (no finite equilibrium).
std::optional<Equilibrium> equilibrium(const OdeParams& p);

struct AsymptoticReport {
  Equilibrium equilibrium;
  double coherence_length;     // hbar sqrt(2 A0) = hbar sqrt(tau eta / lambda0)
  double position_spread;      // 1/sqrt(2 C0); infinity when kappa = 0
  double implied_kBT;          // from the convention lambda0 = tau m eta kBT
  double thermal_length;       // hbar / sqrt(m kBT)
  double thermal_position_spread;  // sqrt(kBT / kappa); infinity when kappa = 0
};

// Requires eta > 0 and lambda0 > 0. Under the convention
// lambda0 = tau m eta kBT the coherence length equals hbar/sqrt(m kBT) and
// the position spread equals sqrt(kBT/kappa); both are reported for
// comparison.
AsymptoticReport asymptotics(const OdeParams& p);

}  // namespace wigner
