#include "wigner/gaussian_ode.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wigner {

double TrajectoryPoint::exp_minus_D() const { return std::exp(-D); }

void validate(const OdeParams& p) {
  if (!(p.m > 0.0)) throw std::invalid_argument("OdeParams: m must be positive");
  if (!(p.tau > 0.0)) throw std::invalid_argument("OdeParams: tau must be positive");
  if (!(p.lambda0 >= 0.0)) throw std::invalid_argument("OdeParams: lambda0 must be >= 0");
  if (!(p.kappa >= 0.0)) throw std::invalid_argument("OdeParams: kappa must be >= 0");
  if (!(p.eta >= 0.0)) throw std::invalid_argument("OdeParams: eta must be >= 0");
  if (!(p.hbar > 0.0)) throw std::invalid_argument("OdeParams: hbar must be positive");
}

OdeDerivative ode_rhs(const OdeParams& p, const GaussianParams& s) {
  const double g = p.lambda0 / p.tau;
  return OdeDerivative{
      -s.B / p.m - 4.0 * g * s.A * s.A + 2.0 * p.eta * s.A,
      -2.0 * s.C / p.m - 4.0 * g * s.A * s.B + 2.0 * p.kappa * s.A + p.eta * s.B,
      -g * s.B * s.B + p.kappa * s.B,
      2.0 * g * s.A - p.eta,
  };
}

Trajectory integrate(const OdeParams& p, const GaussianParams& init, double t_end, double dt,
                     int sample_every) {
  validate(p);
  if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be positive");
  if (sample_every < 1) throw std::invalid_argument("integrate: sample_every must be >= 1");

  const long n_steps = std::lround(t_end / dt);
  Trajectory traj;
  traj.reserve(n_steps / sample_every + 2);

  GaussianParams y = init;
  double t = 0.0;
  traj.push_back({t, y.A, y.B, y.C, y.D});

  auto add = [](const GaussianParams& a, const OdeDerivative& d, double h) {
    return GaussianParams{a.A + h * d.dA, a.B + h * d.dB, a.C + h * d.dC, a.D + h * d.dD};
  };
  for (long step = 1; step <= n_steps; ++step) {
    const OdeDerivative k1 = ode_rhs(p, y);
    const OdeDerivative k2 = ode_rhs(p, add(y, k1, 0.5 * dt));
    const OdeDerivative k3 = ode_rhs(p, add(y, k2, 0.5 * dt));
    const OdeDerivative k4 = ode_rhs(p, add(y, k3, dt));
    y.A += dt / 6.0 * (k1.dA + 2.0 * (k2.dA + k3.dA) + k4.dA);
    y.B += dt / 6.0 * (k1.dB + 2.0 * (k2.dB + k3.dB) + k4.dB);
    y.C += dt / 6.0 * (k1.dC + 2.0 * (k2.dC + k3.dC) + k4.dC);
    y.D += dt / 6.0 * (k1.dD + 2.0 * (k2.dD + k3.dD) + k4.dD);
    t = step * dt;
    if (step % sample_every == 0 || step == n_steps) {
      traj.push_back({t, y.A, y.B, y.C, y.D});
    }
  }
  return traj;
}

std::optional<Equilibrium> equilibrium(const OdeParams& p) {
  validate(p);
  if (p.eta == 0.0) return Equilibrium{0.0, 0.0, 0.0};
  if (p.lambda0 == 0.0) return std::nullopt;  // friction without diffusion: A grows unboundedly
  const double A0 = p.tau * p.eta / (2.0 * p.lambda0);
  return Equilibrium{A0, 0.0, p.m * p.kappa * A0};
}

AsymptoticReport asymptotics(const OdeParams& p) {
  validate(p);
  if (!(p.eta > 0.0) || !(p.lambda0 > 0.0)) {
    throw std::invalid_argument("asymptotics: requires eta > 0 and lambda0 > 0");
  }
  const Equilibrium eq = *equilibrium(p);
  const double inf = std::numeric_limits<double>::infinity();
  AsymptoticReport r;
  r.equilibrium = eq;
  r.coherence_length = p.hbar * std::sqrt(2.0 * eq.A0);
  r.position_spread = eq.C0 > 0.0 ? 1.0 / std::sqrt(2.0 * eq.C0) : inf;
  r.implied_kBT = p.lambda0 / (p.tau * p.m * p.eta);
  r.thermal_length = p.hbar / std::sqrt(p.m * r.implied_kBT);
  r.thermal_position_spread = p.kappa > 0.0 ? std::sqrt(r.implied_kBT / p.kappa) : inf;
  return r;
}

}  // namespace wigner
