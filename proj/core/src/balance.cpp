#include "wigner/balance.hpp"

#include <cmath>
#include <stdexcept>

namespace wigner {

namespace {

void norms(const std::vector<double>& r, double dx, double& l2, double& mx) {
  double s = 0.0;
  mx = 0.0;
  for (double v : r) {
    s += v * v;
    mx = std::max(mx, std::abs(v));
  }
  l2 = std::sqrt(s * dx);
}

// Centered difference on the periodic x grid.
double ddx(const std::vector<double>& f, int i, double dx) {
  const int n = static_cast<int>(f.size());
  return (f[(i + 1) % n] - f[(i + n - 1) % n]) / (2.0 * dx);
}

}  // namespace

BalanceResidual residuals(const MomentFields& prev, const MomentFields& mid,
                          const MomentFields& next, const BalanceParams& q,
                          std::span<const double> v_prime) {
  const int n = static_cast<int>(mid.N.size());
  if (static_cast<int>(prev.N.size()) != n || static_cast<int>(next.N.size()) != n ||
      static_cast<int>(v_prime.size()) != n) {
    throw std::invalid_argument("residuals: snapshot/V' grids do not match");
  }
  const double dt_f = next.time - mid.time;
  const double dt_b = mid.time - prev.time;
  if (!(dt_f > 0.0) || std::abs(dt_f - dt_b) > 1e-9 * dt_f) {
    throw std::invalid_argument("residuals: snapshots must be equispaced in time");
  }
  const double two_dt = dt_f + dt_b;
  const double dx = mid.dx;

  BalanceResidual r;
  r.r_N.resize(n);
  r.r_J.resize(n);
  r.r_E.resize(n);
  r.dt_used = dt_f;
  r.dx_used = dx;
  r.time = mid.time;

  const double drift = q.hbar * q.lambda1 / (q.m * q.tau);
  const double heat = q.hbar * q.hbar * q.lambda2 / (q.m * q.tau);
  for (int i = 0; i < n; ++i) {
    const double dN_dt = (next.N[i] - prev.N[i]) / two_dt;
    const double dJ_dt = (next.J[i] - prev.J[i]) / two_dt;
    const double dE_dt = (next.E[i] - prev.E[i]) / two_dt;
    r.r_N[i] = dN_dt + ddx(mid.J, i, dx);
    r.r_J[i] = dJ_dt + ddx(mid.flux_J, i, dx) + v_prime[i] * mid.N[i] / q.m -
               drift * mid.N[i] + q.eta * mid.J[i];
    r.r_E[i] = dE_dt + ddx(mid.flux_E, i, dx) + v_prime[i] * mid.J[i] -
               q.hbar * q.lambda1 * mid.J[i] / q.tau - heat * mid.N[i] +
               2.0 * q.eta * mid.E[i];
  }
  norms(r.r_N, dx, r.l2_N, r.max_N);
  norms(r.r_J, dx, r.l2_J, r.max_J);
  norms(r.r_E, dx, r.l2_E, r.max_E);
  return r;
}

std::vector<BalanceResidual> residual_series(std::span<const MomentFields> snapshots,
                                             const BalanceParams& params,
                                             std::span<const double> v_prime) {
  if (snapshots.size() < 3) {
    throw std::invalid_argument("residual_series: need at least 3 snapshots");
  }
  std::vector<BalanceResidual> out;
  out.reserve(snapshots.size() - 2);
  for (std::size_t k = 1; k + 1 < snapshots.size(); ++k) {
    out.push_back(residuals(snapshots[k - 1], snapshots[k], snapshots[k + 1], params, v_prime));
  }
  return out;
}

ThetaMomentCheck theta_moments_check(const WignerState& state, const PotentialSpec& potential,
                                     double m) {
  SolverConfig cfg;
  cfg.m = m;
  cfg.hbar = state.grid.hbar();
  cfg.theta_mode = ThetaMode::Spectral;
  WignerSolver solver(state.grid, cfg, potential);
  const WignerState theta_w = solver.theta_operator(state);

  const MomentFields mw = moments(state, m);
  const MomentFields mt = moments(theta_w, m);

  const int n = state.grid.n_x();
  double dev0 = 0.0, dev1 = 0.0, dev2 = 0.0, scale = 0.0;
  for (int i = 0; i < n; ++i) {
    const double vp = potential_derivative(potential, state.grid.x(i), state.grid);
    const double ref1 = vp * mw.N[i] / m;
    const double ref2 = vp * mw.J[i];
    dev0 = std::max(dev0, std::abs(mt.N[i]));
    dev1 = std::max(dev1, std::abs(mt.J[i] - ref1));
    dev2 = std::max(dev2, std::abs(mt.E[i] - ref2));
    scale = std::max({scale, std::abs(ref1), std::abs(ref2)});
  }
  if (scale == 0.0) {
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(mw.N[i]));
    scale = std::max(scale, 1e-300);
  }
  return ThetaMomentCheck{dev0 / scale, dev1 / scale, dev2 / scale};
}

}  // namespace wigner
