#include "wigner/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "wigner/csvio.hpp"
#include "wigner/fit.hpp"
#include "wigner/log.hpp"
#include "wigner/moments.hpp"

namespace wigner {

namespace fs = std::filesystem;

namespace {

std::string snapshot_name(const char* prefix, long step) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%06ld.csv", prefix, step);
  return buf;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir + ": " + ec.message());
}

double normalized_D(const GaussianParams& g) {
  // Mass 2 pi e^{-D} / sqrt(4AC - B^2) = 1.
  return std::log(2.0 * M_PI / std::sqrt(g.discriminant()));
}

const char* kFiguresPlotScript = R"PY(#!/usr/bin/env python3
"""Renders the gaussian-ansatz trajectory CSVs produced alongside this script."""
import csv
import os
import sys

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))
for name in ("fig1", "fig2", "fig3"):
    path = os.path.join(here, name + ".csv")
    if not os.path.exists(path):
        print("missing", path, file=sys.stderr)
        continue
    cols = {}
    with open(path) as f:
        reader = csv.DictReader(f)
        for row in reader:
            for k, v in row.items():
                cols.setdefault(k, []).append(float(v))
    t = cols["t"]
    plt.figure(figsize=(6, 4))
    plt.plot(t, cols["A"], "b-", label="A")
    plt.plot(t, cols["B"], "m--", label="B")
    plt.plot(t, cols["C"], "r-.", label="C")
    plt.plot(t, cols["exp_minus_D"], "g:", label="exp(-D)")
    plt.xlabel("t")
    plt.legend()
    plt.tight_layout()
    out = os.path.join(here, name + ".png")
    plt.savefig(out, dpi=150)
    plt.close()
    print("wrote", out)
)PY";

}  // namespace

DecoherenceKernel make_kernel(const KernelConfig& kc, const PhaseGrid& grid) {
  const XiGrid xi = grid.conjugate_xi_grid();
  switch (kc.variant) {
    case KernelConfig::Variant::PeakedGaussian:
      return build_kernel(PeakedGaussianEnv{kc.k0, kc.sigma, kc.r0_sq}, xi, grid.hbar());
    case KernelConfig::Variant::Lorentzian:
      return lorentzian_kernel(kc.lambda_c, kc.p0, xi, grid.hbar());
    case KernelConfig::Variant::Tabulated:
      return build_kernel(read_tabulated_env(kc.path), xi, grid.hbar());
    case KernelConfig::Variant::None:
      break;
  }
  throw ConfigError("kernel.variant", "no kernel specified");
}

WignerState make_initial_state(const RunConfig& cfg, const PhaseGrid& grid) {
  if (cfg.initial_state.from_file) {
    WignerState s = csv::read_state(cfg.initial_state.path);
    if (!s.grid.same_shape(grid)) {
      throw ConfigError("initial_state.path", "grid dump does not match the configured grid");
    }
    return s;
  }
  GaussianParams g = cfg.initial_state.gaussian;
  if (cfg.initial_state.normalize_mass) g.D = normalized_D(g);
  return gaussian_state(g, grid);
}

OdeParams ode_params_from(const RunConfig& cfg) {
  OdeParams p;
  p.m = cfg.solver.m;
  p.tau = cfg.solver.tau;
  p.eta = cfg.solver.eta;
  p.hbar = cfg.solver.hbar;
  p.kappa = 0.0;
  if (const auto* h = std::get_if<HarmonicPotential>(&cfg.potential)) p.kappa = h->kappa;
  p.lambda0 = 0.0;
  if (const auto* fp = std::get_if<DecoFokkerPlanck>(&cfg.solver.decoherence)) {
    p.lambda0 = cfg.solver.hbar * cfg.solver.hbar * fp->lambda2;
  }
  return p;
}

PdeRunResult run_pde(const RunConfig& cfg, const std::string& outdir) {
  ensure_dir(outdir);
  const PhaseGrid grid = cfg.make_grid();

  std::optional<DecoherenceKernel> kernel;
  if (cfg.kernel.variant != KernelConfig::Variant::None) {
    kernel.emplace(make_kernel(cfg.kernel, grid));
    if (cfg.output.dump_kernel) {
      csv::write_kernel(outdir + "/kernel_lambda.csv", outdir + "/kernel_gamma.csv", *kernel);
    }
  }

  WignerState s = make_initial_state(cfg, grid);
  WignerSolver solver(grid, cfg.solver, cfg.potential, kernel ? &*kernel : nullptr);
  log::info("cfl-like bound p_max dt/(m dx) = " + std::to_string(solver.diagnostics().cfl));

  PdeRunResult result;
  result.initial_mass = s.mass();

  auto snapshot = [&](long step) {
    const MomentFields m = moments(s, cfg.solver.m);
    csv::write_moments(outdir + "/" + snapshot_name("moments", step), m);
    if (cfg.output.dump_states) {
      csv::write_state(outdir + "/" + snapshot_name("state", step), s);
    }
  };

  const long n_steps = std::lround(cfg.t_end / cfg.solver.dt);
  snapshot(0);
  for (long step = 1; step <= n_steps; ++step) {
    solver.step(s);
    if (step % cfg.output.snapshot_every == 0 || step == n_steps) snapshot(step);
  }
  csv::write_state(outdir + "/state_final.csv", s);

  result.final_mass = s.mass();
  result.steps = n_steps;
  result.max_boundary_leak = solver.diagnostics().max_boundary_leak;
  return result;
}

Trajectory run_ode(const RunConfig& cfg, const std::string& outdir) {
  ensure_dir(outdir);
  GaussianParams init = cfg.initial_state.gaussian;
  if (cfg.initial_state.normalize_mass) init.D = normalized_D(init);
  const Trajectory traj = integrate(ode_params_from(cfg), init, cfg.t_end, cfg.solver.dt,
                                    cfg.output.snapshot_every);
  csv::write_trajectory(outdir + "/trajectory.csv", traj, cfg.solver.hbar);
  return traj;
}

CrossValResult run_cross_validation(const RunConfig& cfg, const std::string& outdir) {
  ensure_dir(outdir);
  const PhaseGrid grid = cfg.make_grid();

  GaussianParams init = cfg.initial_state.gaussian;
  if (cfg.initial_state.normalize_mass) init.D = normalized_D(init);
  WignerState s = gaussian_state(init, grid);
  WignerSolver solver(grid, cfg.solver, cfg.potential);

  const Trajectory ode = integrate(ode_params_from(cfg), init, cfg.t_end, cfg.solver.dt,
                                   cfg.output.snapshot_every);

  // Parameter scales for relative deviations: sup over the ODE trajectory.
  double sA = 0.0, sB = 0.0, sC = 0.0, sD = 0.0;
  for (const TrajectoryPoint& p : ode) {
    sA = std::max(sA, std::abs(p.A));
    sB = std::max(sB, std::abs(p.B));
    sC = std::max(sC, std::abs(p.C));
    sD = std::max(sD, std::abs(p.D));
  }
  sA = std::max(sA, 1e-12);
  sB = std::max(sB, 1e-12);
  sC = std::max(sC, 1e-12);
  sD = std::max(sD, 1e-12);

  std::ofstream csv_out(outdir + "/crossval.csv");
  if (!csv_out) throw std::runtime_error("cannot open " + outdir + "/crossval.csv");
  csv_out << "t,A_pde,B_pde,C_pde,D_pde,A_ode,B_ode,C_ode,D_ode,"
             "rel_A,rel_B,rel_C,rel_D,fit_residual\n";

  CrossValResult r;
  const long n_steps = std::lround(cfg.t_end / cfg.solver.dt);
  std::size_t ode_idx = 0;
  auto compare = [&](long step) {
    const GaussianFit fit = fit_gaussian(s);
    while (ode_idx + 1 < ode.size() &&
           std::abs(ode[ode_idx].t - step * cfg.solver.dt) >
               std::abs(ode[ode_idx + 1].t - step * cfg.solver.dt)) {
      ++ode_idx;
    }
    const TrajectoryPoint& o = ode[ode_idx];
    const double rA = std::abs(fit.params.A - o.A) / sA;
    const double rB = std::abs(fit.params.B - o.B) / sB;
    const double rC = std::abs(fit.params.C - o.C) / sC;
    const double rD = std::abs(fit.params.D - o.D) / sD;
    r.max_rel_A = std::max(r.max_rel_A, rA);
    r.max_rel_B = std::max(r.max_rel_B, rB);
    r.max_rel_C = std::max(r.max_rel_C, rC);
    r.max_rel_D = std::max(r.max_rel_D, rD);
    r.worst_fit_residual = std::max(r.worst_fit_residual, fit.residual);
    ++r.snapshots;
    csv_out << csv::format_double(step * cfg.solver.dt) << ','
            << csv::format_double(fit.params.A) << ',' << csv::format_double(fit.params.B) << ','
            << csv::format_double(fit.params.C) << ',' << csv::format_double(fit.params.D) << ','
            << csv::format_double(o.A) << ',' << csv::format_double(o.B) << ','
            << csv::format_double(o.C) << ',' << csv::format_double(o.D) << ','
            << csv::format_double(rA) << ',' << csv::format_double(rB) << ','
            << csv::format_double(rC) << ',' << csv::format_double(rD) << ','
            << csv::format_double(fit.residual) << '\n';
  };

  compare(0);
  for (long step = 1; step <= n_steps; ++step) {
    solver.step(s);
    if (step % cfg.output.snapshot_every == 0 || step == n_steps) compare(step);
  }
  r.max_rel_overall = std::max({r.max_rel_A, r.max_rel_B, r.max_rel_C, r.max_rel_D});

  std::ofstream summary(outdir + "/crossval_summary.csv");
  summary << "max_rel_A,max_rel_B,max_rel_C,max_rel_D,max_rel_overall,worst_fit_residual\n"
          << csv::format_double(r.max_rel_A) << ',' << csv::format_double(r.max_rel_B) << ','
          << csv::format_double(r.max_rel_C) << ',' << csv::format_double(r.max_rel_D) << ','
          << csv::format_double(r.max_rel_overall) << ','
          << csv::format_double(r.worst_fit_residual) << '\n';
  return r;
}

void run_figures(const std::string& outdir) {
  ensure_dir(outdir);
  struct Scenario {
    const char* file;
    OdeParams params;
  };
  const GaussianParams init{1.0, 0.0, 1.0, 0.0};
  const Scenario runs[] = {
      {"fig1.csv", OdeParams{0.4, 1.0, 1.0, 1.0, 0.0, 1.0}},
      {"fig2.csv", OdeParams{0.4, 1.0, 1.0, 1.0, 0.5, 1.0}},
      {"fig3.csv", OdeParams{0.4, 1.0, 1.0, 0.0, 0.5, 1.0}},
  };
  for (const Scenario& sc : runs) {
    const Trajectory traj = integrate(sc.params, init, 50.0, 1e-3, 10);
    csv::write_trajectory(outdir + "/" + sc.file, traj, sc.params.hbar);
  }
  std::ofstream script(outdir + "/plot_figures.py");
  if (!script) throw std::runtime_error("cannot write plot script in " + outdir);
  script << kFiguresPlotScript;
}

int run_scenario(const RunConfig& cfg, const std::string& outdir_override) {
  const std::string outdir =
      outdir_override.empty() ? cfg.output.directory : outdir_override;
  switch (cfg.mode) {
    case RunMode::Figures:
      run_figures(outdir);
      std::cout << "figures written to " << outdir << "\n";
      return 0;
    case RunMode::Ode: {
      const Trajectory t = run_ode(cfg, outdir);
      std::cout << "ode trajectory with " << t.size() << " samples written to " << outdir << "\n";
      return 0;
    }
    case RunMode::CrossValidate: {
      const CrossValResult r = run_cross_validation(cfg, outdir);
      std::cout << "cross-validation max relative deviation " << r.max_rel_overall << " over "
                << r.snapshots << " snapshots (A " << r.max_rel_A << ", B " << r.max_rel_B
                << ", C " << r.max_rel_C << ", D " << r.max_rel_D << ")\n";
      return 0;
    }
    case RunMode::Pde: {
      const PdeRunResult r = run_pde(cfg, outdir);
      const double drift = std::abs(r.final_mass - r.initial_mass) /
                           std::max(std::abs(r.initial_mass), 1e-300);
      std::cout << "pde run: " << r.steps << " steps, relative mass drift " << drift
                << ", boundary leak " << r.max_boundary_leak << "\n";
      return 0;
    }
  }
  return 2;
}

}  // namespace wigner
