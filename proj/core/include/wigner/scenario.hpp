#pragma once

#include <string>

#include "wigner/config.hpp"
#include "wigner/gaussian_ode.hpp"

namespace wigner {

struct CrossValResult {
  double max_rel_A = 0.0, max_rel_B = 0.0, max_rel_C = 0.0, max_rel_D = 0.0;
  double max_rel_overall = 0.0;
  double worst_fit_residual = 0.0;
  long snapshots = 0;
};

struct PdeRunResult {
  double initial_mass = 0.0;
  double final_mass = 0.0;
  long steps = 0;
  double max_boundary_leak = 0.0;
};

// Builds a DecoherenceKernel from the config's kernel section on the grid
// conjugate to `grid`. Variant::None yields an error.
DecoherenceKernel make_kernel(const KernelConfig& kc, const PhaseGrid& grid);

// Initial state from the config (gaussian, optionally mass-normalized, or a
// grid dump re-read from disk).
WignerState make_initial_state(const RunConfig& cfg, const PhaseGrid& grid);

// ODE parameters implied by the config's solver/potential/decoherence
// sections (lambda0 = hbar^2 Lambda2, kappa from the harmonic potential).
OdeParams ode_params_from(const RunConfig& cfg);

PdeRunResult run_pde(const RunConfig& cfg, const std::string& outdir);
Trajectory run_ode(const RunConfig& cfg, const std::string& outdir);
CrossValResult run_cross_validation(const RunConfig& cfg, const std::string& outdir);

// The three built-in gaussian-ansatz scenarios (harmonic trap without
// friction, with friction, and friction without the trap) with the shared
// parameter set m = 0.4, tau = 1, lambda0 = 1; writes fig1.csv, fig2.csv,
// fig3.csv and a matplotlib script rendering one image per run.
void run_figures(const std::string& outdir);

// Dispatch on cfg.mode; returns the process exit code (0 ok, 2 runtime error).
int run_scenario(const RunConfig& cfg, const std::string& outdir_override = "");

}  // namespace wigner
