#include <benchmark/benchmark.h>

#include "wigner/gaussian_ode.hpp"
#include "wigner/kernel.hpp"
#include "wigner/moments.hpp"
#include "wigner/solver.hpp"

using namespace wigner;

namespace {

PhaseGrid make_grid(int n) { return PhaseGrid(-16, 16, n, -16, 16, n); }

void BM_strang_step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PhaseGrid g = make_grid(n);
  SolverConfig cfg;
  cfg.m = 0.4;
  cfg.dt = 1e-3;
  cfg.theta_mode = ThetaMode::Spectral;
  cfg.decoherence = DecoFokkerPlanck{1.0};
  WignerSolver solver(g, cfg, HarmonicPotential{1.0});
  WignerState s = gaussian_state(GaussianParams{1, 0, 1, 0}, g);
  for (auto _ : state) {
    solver.step(s);
    benchmark::DoNotOptimize(s.w.data());
  }
  state.SetItemsProcessed(state.iterations() * g.size());
}
BENCHMARK(BM_strang_step)->Arg(128)->Arg(256)->Arg(512);

void BM_step_with_friction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PhaseGrid g = make_grid(n);
  SolverConfig cfg;
  cfg.m = 0.4;
  cfg.eta = 0.5;
  cfg.dt = 1e-3;
  cfg.decoherence = DecoFokkerPlanck{1.0};
  WignerSolver solver(g, cfg, HarmonicPotential{1.0});
  WignerState s = gaussian_state(GaussianParams{1, 0, 1, 0}, g);
  for (auto _ : state) {
    solver.step(s);
    benchmark::DoNotOptimize(s.w.data());
  }
}
BENCHMARK(BM_step_with_friction)->Arg(128)->Arg(256);

void BM_build_kernel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const XiGrid xi{n, 24.0 / n};
  for (auto _ : state) {
    const DecoherenceKernel k = build_kernel(PeakedGaussianEnv{0.5, 1.0, 0.8}, xi, 1.0);
    benchmark::DoNotOptimize(k.gamma().data());
  }
}
BENCHMARK(BM_build_kernel)->Arg(256)->Arg(1024);

void BM_moments(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PhaseGrid g = make_grid(n);
  const WignerState s = gaussian_state(GaussianParams{1, 0, 1, 0}, g);
  for (auto _ : state) {
    const MomentFields m = moments(s, 0.4);
    benchmark::DoNotOptimize(m.N.data());
  }
}
BENCHMARK(BM_moments)->Arg(256)->Arg(512);

void BM_ode_integrate(benchmark::State& state) {
  OdeParams p;
  p.m = 0.4;
  p.eta = 0.5;
  for (auto _ : state) {
    const Trajectory t = integrate(p, GaussianParams{1, 0, 1, 0}, 50.0, 1e-3, 1000);
    benchmark::DoNotOptimize(t.data());
  }
}
BENCHMARK(BM_ode_integrate);

}  // namespace

BENCHMARK_MAIN();
