#pragma once

#include <string>

#include "wigner/balance.hpp"
#include "wigner/gaussian_ode.hpp"
#include "wigner/kernel.hpp"
#include "wigner/moments.hpp"
#include "wigner/state.hpp"

namespace wigner::csv {

// All writers emit shortest-round-trip decimal ("%.17g"), so repeated runs of
// the same configuration are bit-identical.
std::string format_double(double v);

// Grid dump with a metadata header (n_x, n_p, bounds, hbar, time) followed by
// one row of n_p values per x node.
void write_state(const std::string& path, const WignerState& state);
WignerState read_state(const std::string& path);

// Columns: x, N, J, E, flux_E.
void write_moments(const std::string& path, const MomentFields& fields);

// Two files: (xi, Re Lambda, Im Lambda) and (p, Re gamma, Im gamma).
void write_kernel(const std::string& lambda_path, const std::string& gamma_path,
                  const DecoherenceKernel& kernel);

// Columns: t, A, B, C, D, exp_minus_D, coherence_length (hbar sqrt(2A),
// "nan" when A <= 0).
void write_trajectory(const std::string& path, const Trajectory& traj, double hbar);

// Per-snapshot-time L2/max norms per balance equation.
void write_residual_report(const std::string& path,
                           const std::vector<BalanceResidual>& series);

}  // namespace wigner::csv
