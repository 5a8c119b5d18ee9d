#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "wigner/fft.hpp"
#include "wigner/kernel.hpp"
#include "wigner/potential.hpp"
#include "wigner/state.hpp"

namespace wigner {

enum class ThetaMode { Spectral, ClassicalForce };

struct DecoNone {};
struct DecoFullKernel {};  // Lambda taken from the kernel passed to the solver
struct DecoFokkerPlanckDrift {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};
struct DecoFokkerPlanck {
  double lambda2 = 0.0;
};
struct DecoJacoboniBordone {
  double lambda_c = 1.0;
  double p0 = 0.0;
};
using DecoherenceMode = std::variant<DecoNone, DecoFullKernel, DecoFokkerPlanckDrift,
                                     DecoFokkerPlanck, DecoJacoboniBordone>;

struct SolverConfig {
  double m = 0.4;
  double tau = 1.0;
  double eta = 0.0;
  double hbar = 1.0;
  double dt = 1e-3;
  DecoherenceMode decoherence = DecoNone{};
  ThetaMode theta_mode = ThetaMode::Spectral;
};

struct SolverDiagnostics {
  double cfl = 0.0;             // p_max dt / (m dx); spectral transport is stable,
                                // the bound only guards aliasing
  bool theta_aliasing = false;  // theta phase step exceeded pi between xi bins
  bool p_boundary_outflow = false;
  long steps = 0;
  double last_mass = 0.0;
  double max_boundary_leak = 0.0;  // max over steps of boundary |w| / max |w|
};

// Operator-splitting integrator for the decoherence Wigner equation
//   dw/dt + (p/m) dw/dx + Theta[V - (hbar/tau) Gamma] w
//     = -(gamma * w)/tau + eta d(p w)/dp
// on a periodic phase-space grid. Every substep is exact for its own
// generator; one step() is the second-order Strang composition
//   T(dt/2) Theta(dt/2) D(dt/2) F(dt) D(dt/2) Theta(dt/2) T(dt/2).
class WignerSolver {
 public:
  WignerSolver(const PhaseGrid& grid, const SolverConfig& config, const PotentialSpec& potential,
               const DecoherenceKernel* kernel = nullptr);

  void step(WignerState& state);

  // Exact substeps (public for validation work; step() composes cached
  // versions of the same passes).
  void apply_transport(WignerState& state, double dt);
  void apply_theta(WignerState& state, double dt);
  void apply_decoherence(WignerState& state, double dt);
  void apply_friction(WignerState& state, double dt);

  // Generator applications, for moment checks and time-derivative oracles.
  WignerState theta_operator(const WignerState& state);       // Theta[V_eff] w
  WignerState gamma_convolution(const WignerState& state);    // gamma * w

  const SolverDiagnostics& diagnostics() const { return diag_; }
  const SolverConfig& config() const { return cfg_; }
  double effective_potential(double x) const;
  double effective_force_term(double x) const;  // V_eff'(x)

 private:
  void load(const WignerState& s);
  void store(WignerState& s, double scale);
  void x_roundtrip(WignerState& s, const std::vector<cdouble>& table);
  void p_roundtrip(WignerState& s, const std::vector<cdouble>& table);

  std::vector<cdouble> transport_table(double dt) const;
  std::vector<cdouble> inner_table(double theta_dt, double deco_dt);  // theta * deco product
  cdouble theta_multiplier(int ix, double xi, double dt) const;
  cdouble deco_lambda(double xi) const;  // Lambda(xi) for the active mode
  void check_kernel_compatibility() const;
  void update_diagnostics(const WignerState& s);

  PhaseGrid grid_;
  SolverConfig cfg_;
  PotentialSpec potential_;
  const DecoherenceKernel* kernel_;
  SlabFft ws_;
  SolverDiagnostics diag_;

  std::vector<double> gamma_shift_on_x_;  // (hbar/tau) Re Gamma at grid x, empty if none
  std::vector<cdouble> cached_transport_half_;
  std::vector<cdouble> cached_inner_half_;  // theta(dt/2) deco(dt/2)
  std::vector<cdouble> cached_inner_full_;  // theta(dt) deco(dt)
  bool warned_aliasing_ = false;
  bool warned_outflow_ = false;
};

}  // namespace wigner
