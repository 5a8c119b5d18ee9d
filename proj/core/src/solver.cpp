#include "wigner/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wigner/log.hpp"

namespace wigner {

namespace {

cdouble expi(double phase) { return {std::cos(phase), std::sin(phase)}; }

void validate_config(const SolverConfig& c, const PhaseGrid& g) {
  if (!(c.m > 0.0)) throw std::invalid_argument("SolverConfig: m must be positive");
  if (!(c.tau > 0.0)) throw std::invalid_argument("SolverConfig: tau must be positive");
  if (!(c.eta >= 0.0)) throw std::invalid_argument("SolverConfig: eta must be >= 0");
  if (!(c.dt > 0.0)) throw std::invalid_argument("SolverConfig: dt must be positive");
  if (std::abs(c.hbar - g.hbar()) > 1e-12 * g.hbar()) {
    throw std::invalid_argument("SolverConfig: hbar must match the grid's hbar");
  }
}

}  // namespace

WignerSolver::WignerSolver(const PhaseGrid& grid, const SolverConfig& config,
                           const PotentialSpec& potential, const DecoherenceKernel* kernel)
    : grid_(grid), cfg_(config), potential_(potential), kernel_(kernel),
      ws_(grid.n_x(), grid.n_p()) {
  validate_config(cfg_, grid_);
  validate_potential(potential_, grid_);
  check_kernel_compatibility();

  if (kernel_ && kernel_->has_gamma_shift()) {
    std::vector<double> xs(grid_.n_x());
    for (int i = 0; i < grid_.n_x(); ++i) xs[i] = grid_.x(i);
    gamma_shift_on_x_ = kernel_->gamma_shift(xs);
  }

  const double p_amp = std::max(std::abs(grid_.p_min()), std::abs(grid_.p_max()));
  diag_.cfl = p_amp * cfg_.dt / (cfg_.m * grid_.dx());

  cached_transport_half_ = transport_table(0.5 * cfg_.dt);
  cached_inner_half_ = inner_table(0.5 * cfg_.dt, 0.5 * cfg_.dt);
  cached_inner_full_ = inner_table(cfg_.dt, cfg_.dt);
}

void WignerSolver::check_kernel_compatibility() const {
  if (!std::holds_alternative<DecoFullKernel>(cfg_.decoherence)) return;
  if (!kernel_) {
    throw std::invalid_argument("WignerSolver: FullKernel mode requires a decoherence kernel");
  }
  const XiGrid want = grid_.conjugate_xi_grid();
  const XiGrid& have = kernel_->xi_grid();
  if (have.n != want.n || std::abs(have.dxi - want.dxi) > 1e-9 * want.dxi) {
    throw std::invalid_argument(
        "WignerSolver: kernel xi grid is not conjugate to the state's p grid (need n=" +
        std::to_string(want.n) + ", dxi=" + std::to_string(want.dxi) + ")");
  }
  if (std::abs(kernel_->hbar() - grid_.hbar()) > 1e-12 * grid_.hbar()) {
    throw std::invalid_argument("WignerSolver: kernel and grid disagree on hbar");
  }
  double min_re = 0.0, scale = 0.0;
  for (const cdouble& l : kernel_->lambda()) {
    min_re = std::min(min_re, l.real());
    scale = std::max(scale, std::abs(l));
  }
  if (min_re < -1e-12 * std::max(1.0, scale)) {
    throw std::invalid_argument("WignerSolver: kernel has Re Lambda < 0 (amplification), min Re = " +
                                std::to_string(min_re));
  }
}

double WignerSolver::effective_potential(double x) const {
  double v = potential_value(potential_, x, grid_);
  if (kernel_ && kernel_->has_gamma_shift()) {
    v -= cfg_.hbar / cfg_.tau * kernel_->gamma_shift_at(x);
  }
  return v;
}

double WignerSolver::effective_force_term(double x) const {
  double d = potential_derivative(potential_, x, grid_);
  if (kernel_ && kernel_->has_gamma_shift()) {
    d -= cfg_.hbar / cfg_.tau * kernel_->gamma_shift_derivative_at(x);
  }
  return d;
}

void WignerSolver::load(const WignerState& s) {
  cdouble* b = ws_.slab();
  for (std::size_t k = 0; k < s.w.size(); ++k) b[k] = s.w[k];
}

void WignerSolver::store(WignerState& s, double scale) {
  const cdouble* b = ws_.slab();
  for (std::size_t k = 0; k < s.w.size(); ++k) s.w[k] = b[k].real() * scale;
}

void WignerSolver::x_roundtrip(WignerState& s, const std::vector<cdouble>& table) {
  load(s);
  ws_.cols_backward();
  cdouble* b = ws_.slab();
  for (std::size_t k = 0; k < table.size(); ++k) b[k] *= table[k];
  ws_.cols_forward();
  store(s, 1.0 / grid_.n_x());
}

void WignerSolver::p_roundtrip(WignerState& s, const std::vector<cdouble>& table) {
  load(s);
  ws_.rows_backward();
  cdouble* b = ws_.slab();
  for (std::size_t k = 0; k < table.size(); ++k) b[k] *= table[k];
  ws_.rows_forward();
  store(s, 1.0 / grid_.n_p());
}

std::vector<cdouble> WignerSolver::transport_table(double dt) const {
  const int nx = grid_.n_x(), np = grid_.n_p();
  std::vector<cdouble> t(grid_.size());
  for (int l = 0; l < nx; ++l) {
    const double k = 2.0 * M_PI * bin_frequency(l, nx) / (nx * grid_.dx());
    for (int j = 0; j < np; ++j) {
      cdouble m = expi(k * grid_.p(j) * dt / cfg_.m);
      if (l == nx / 2) m = cdouble(m.real(), 0.0);  // Nyquist bin kept real
      t[static_cast<std::size_t>(l) * np + j] = m;
    }
  }
  return t;
}

cdouble WignerSolver::theta_multiplier(int ix, double xi, double dt) const {
  const double x = grid_.x(ix);
  double dv;
  if (cfg_.theta_mode == ThetaMode::Spectral) {
    dv = effective_potential(x + 0.5 * xi) - effective_potential(x - 0.5 * xi);
  } else {
    dv = effective_force_term(x) * xi;
  }
  return expi(-dt * dv / cfg_.hbar);
}

cdouble WignerSolver::deco_lambda(double xi) const {
  if (std::holds_alternative<DecoNone>(cfg_.decoherence)) return {0.0, 0.0};
  if (std::holds_alternative<DecoFullKernel>(cfg_.decoherence)) {
    const int c = kernel_->xi_grid().center();
    const int l = static_cast<int>(std::lround(xi / kernel_->xi_grid().dxi)) + c;
    return kernel_->lambda()[l];
  }
  if (const auto* fpd = std::get_if<DecoFokkerPlanckDrift>(&cfg_.decoherence)) {
    return {fpd->lambda2 * xi * xi, -fpd->lambda1 * xi};
  }
  if (const auto* fp = std::get_if<DecoFokkerPlanck>(&cfg_.decoherence)) {
    return {fp->lambda2 * xi * xi, 0.0};
  }
  const auto& jb = std::get<DecoJacoboniBordone>(cfg_.decoherence);
  const cdouble damp = std::exp(cdouble(-std::abs(xi) / jb.lambda_c, jb.p0 * xi / cfg_.hbar));
  return 1.0 - damp;
}

std::vector<cdouble> WignerSolver::inner_table(double theta_dt, double deco_dt) {
  const int nx = grid_.n_x(), np = grid_.n_p();
  const double dxi = grid_.conjugate_xi_grid().dxi;
  const bool jb = std::holds_alternative<DecoJacoboniBordone>(cfg_.decoherence);

  std::vector<cdouble> deco(np, cdouble{1.0, 0.0});
  if (deco_dt != 0.0 && !std::holds_alternative<DecoNone>(cfg_.decoherence)) {
    const double relax = std::exp(-deco_dt / cfg_.tau);
    for (int l = 0; l < np; ++l) {
      const double xi = bin_frequency(l, np) * dxi;
      const cdouble lam = deco_lambda(xi);
      // Jacoboni-Bordone relaxes toward the smoothed state with the target
      // frozen over the substep; the other modes are exact exponentials.
      deco[l] = jb ? (1.0 - lam) + relax * lam : std::exp(-lam * deco_dt / cfg_.tau);
    }
  }

  double max_phase_step = 0.0;
  std::vector<cdouble> t(grid_.size());
  for (int i = 0; i < nx; ++i) {
    double prev_phase = 0.0;
    for (int l = 0; l < np; ++l) {
      const double xi = bin_frequency(l, np) * dxi;
      cdouble m = deco[l];
      if (theta_dt != 0.0) {
        const double x = grid_.x(i);
        double dv;
        if (cfg_.theta_mode == ThetaMode::Spectral) {
          dv = effective_potential(x + 0.5 * xi) - effective_potential(x - 0.5 * xi);
        } else {
          dv = effective_force_term(x) * xi;
        }
        const double phase = -theta_dt * dv / cfg_.hbar;
        if (l > 0 && l != np / 2 && l != np / 2 + 1) {
          max_phase_step = std::max(max_phase_step, std::abs(phase - prev_phase));
        }
        prev_phase = phase;
        m *= expi(phase);
      }
      if (l == np / 2) m = cdouble(m.real(), 0.0);
      t[static_cast<std::size_t>(i) * np + l] = m;
    }
  }
  if (max_phase_step > M_PI) {
    diag_.theta_aliasing = true;
    if (!warned_aliasing_) {
      warned_aliasing_ = true;
      log::warn("theta phase step between adjacent xi samples is " +
                std::to_string(max_phase_step) + " > pi; potential is under-resolved");
    }
  }
  return t;
}

void WignerSolver::apply_transport(WignerState& s, double dt) {
  if (dt == 0.0) return;
  x_roundtrip(s, transport_table(dt));
}

void WignerSolver::apply_theta(WignerState& s, double dt) {
  if (dt == 0.0) return;
  p_roundtrip(s, inner_table(dt, 0.0));
}

void WignerSolver::apply_decoherence(WignerState& s, double dt) {
  if (dt == 0.0 || std::holds_alternative<DecoNone>(cfg_.decoherence)) return;
  p_roundtrip(s, inner_table(0.0, dt));
}

void WignerSolver::apply_friction(WignerState& s, double dt) {
  if (cfg_.eta == 0.0 || dt == 0.0) return;
  const int nx = grid_.n_x(), np = grid_.n_p();
  const double dp = grid_.dp();
  const double e0 = grid_.p_min() - 0.5 * dp;  // left edge of cell 0
  const double stretch = std::exp(cfg_.eta * dt);

  // Stretched-edge positions in fractional edge units, shared by all rows.
  std::vector<double> u(np + 1);
  for (int j = 0; j <= np; ++j) u[j] = ((e0 + j * dp) * stretch - e0) / dp;

  std::vector<double> avg(np), W(np + 1), fresh(np);
  double wmax = 0.0, edge = 0.0;
  for (int i = 0; i < nx; ++i) {
    // Midpoint-sample -> cell-average correction (circular, mass-neutral),
    // so the cumulative is fourth-order in dp.
    for (int j = 0; j < np; ++j) {
      const double lap = s.at(i, (j + 1) % np) - 2.0 * s.at(i, j) + s.at(i, (j + np - 1) % np);
      avg[j] = s.at(i, j) + lap / 24.0;
    }
    W[0] = 0.0;
    for (int j = 0; j < np; ++j) W[j + 1] = W[j] + avg[j] * dp;
    auto cumulative = [&](double pos) -> double {
      if (pos <= 0.0) return 0.0;
      if (pos >= np) return W[np];
      const int b = static_cast<int>(pos);
      const double t = pos - b;
      auto at = [&](int k) { return W[std::clamp(k, 0, np)]; };
      const double w0 = -t * (t - 1.0) * (t - 2.0) / 6.0;
      const double w1 = (t * t - 1.0) * (t - 2.0) / 2.0;
      const double w2 = -t * (t + 1.0) * (t - 2.0) / 2.0;
      const double w3 = t * (t * t - 1.0) / 6.0;
      return w0 * at(b - 1) + w1 * at(b) + w2 * at(b + 1) + w3 * at(b + 2);
    };
    double left = cumulative(u[0]);
    for (int j = 0; j < np; ++j) {
      const double right = cumulative(u[j + 1]);
      fresh[j] = (right - left) / dp;
      left = right;
    }
    edge = std::max(edge, std::max(std::abs(s.at(i, 0)), std::abs(s.at(i, np - 1))));
    // cell-average -> midpoint correction (the circular inverse)
    for (int j = 0; j < np; ++j) {
      const double lap = fresh[(j + 1) % np] - 2.0 * fresh[j] + fresh[(j + np - 1) % np];
      const double v = fresh[j] - lap / 24.0;
      s.at(i, j) = v;
      wmax = std::max(wmax, std::abs(v));
    }
  }
  if (wmax > 0.0 && edge > 1e-8 * wmax) {
    diag_.p_boundary_outflow = true;
    if (!warned_outflow_) {
      warned_outflow_ = true;
      log::warn("friction substep: |w| at the p boundary is " + std::to_string(edge / wmax) +
                " of max |w|; dilation is sampling outside the grid");
    }
  }
}

void WignerSolver::step(WignerState& s) {
  if (!s.grid.same_shape(grid_)) {
    throw std::invalid_argument("WignerSolver::step: state grid does not match the solver grid");
  }
  x_roundtrip(s, cached_transport_half_);
  if (cfg_.eta > 0.0) {
    p_roundtrip(s, cached_inner_half_);
    apply_friction(s, cfg_.dt);
    p_roundtrip(s, cached_inner_half_);
  } else {
    p_roundtrip(s, cached_inner_full_);
  }
  x_roundtrip(s, cached_transport_half_);
  s.time += cfg_.dt;
  update_diagnostics(s);
}

void WignerSolver::update_diagnostics(const WignerState& s) {
  ++diag_.steps;
  double mass = 0.0, wmax = 0.0;
  bool bad = false;
  for (double v : s.w) {
    mass += v;
    wmax = std::max(wmax, std::abs(v));
    bad |= !std::isfinite(v);
  }
  if (bad) {
    throw std::runtime_error("WignerSolver::step produced non-finite values at t = " +
                             std::to_string(s.time));
  }
  diag_.last_mass = mass * grid_.dx() * grid_.dp();
  if (wmax > 0.0) {
    diag_.max_boundary_leak = std::max(diag_.max_boundary_leak, s.boundary_max_abs() / wmax);
  }
}

WignerState WignerSolver::theta_operator(const WignerState& s) {
  const int nx = grid_.n_x(), np = grid_.n_p();
  const double dxi = grid_.conjugate_xi_grid().dxi;
  std::vector<cdouble> t(grid_.size());
  for (int i = 0; i < nx; ++i) {
    const double x = grid_.x(i);
    for (int l = 0; l < np; ++l) {
      const double xi = bin_frequency(l, np) * dxi;
      double dv;
      if (cfg_.theta_mode == ThetaMode::Spectral) {
        dv = effective_potential(x + 0.5 * xi) - effective_potential(x - 0.5 * xi);
      } else {
        dv = effective_force_term(x) * xi;
      }
      cdouble m = cdouble(0.0, dv / cfg_.hbar);
      if (l == np / 2) m = cdouble(0.0, 0.0);
      t[static_cast<std::size_t>(i) * np + l] = m;
    }
  }
  WignerState out = s;
  p_roundtrip(out, t);
  return out;
}

WignerState WignerSolver::gamma_convolution(const WignerState& s) {
  const int np = grid_.n_p();
  const double dxi = grid_.conjugate_xi_grid().dxi;
  std::vector<cdouble> t(grid_.size());
  for (int i = 0; i < grid_.n_x(); ++i) {
    for (int l = 0; l < np; ++l) {
      const double xi = bin_frequency(l, np) * dxi;
      cdouble m = deco_lambda(xi);
      if (l == np / 2) m = cdouble(m.real(), 0.0);
      t[static_cast<std::size_t>(i) * np + l] = m;
    }
  }
  WignerState out = s;
  p_roundtrip(out, t);
  return out;
}

}  // namespace wigner
