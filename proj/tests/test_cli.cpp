#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wigner/config.hpp"
#include "wigner/csvio.hpp"
#include "wigner/fit.hpp"
#include "wigner/scenario.hpp"

using namespace wigner;
namespace fs = std::filesystem;

namespace {

std::string tmp_dir(const std::string& leaf) {
  const fs::path p = fs::temp_directory_path() / "wignerdeco_tests" / leaf;
  fs::remove_all(p);
  fs::create_directories(p);
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const char* kCrossvalConfig = R"({
  "scenario": "crossval-smoke",
  "mode": "cross-validate",
  "grid": {"x_min": -24, "x_max": 24, "n_x": 128, "p_min": -24, "p_max": 24, "n_p": 128},
  "solver": {"m": 0.4, "tau": 1.0, "eta": 0.0, "dt": 1e-3, "t_end": 0.5,
             "theta_mode": "classical-force",
             "decoherence": {"mode": "fokker-planck", "lambda2": 1.0}},
  "potential": {"variant": "harmonic", "kappa": 1.0},
  "initial_state": {"type": "gaussian", "A": 1.0, "B": 0.0, "C": 1.0, "D": 0.0},
  "output": {"directory": "ignored", "snapshot_every": 100}
})";

}  // namespace

TEST_CASE("config parsing and validation") {
  SUBCASE("missing tau is reported by name") {
    const char* text = R"({"mode": "pde", "solver": {"m": 0.4}})";
    try {
      parse_config_text(text);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.field() == "solver.tau");
      CHECK(std::string(e.what()).find("solver.tau") != std::string::npos);
    }
  }
  SUBCASE("bad json is rejected") {
    CHECK_THROWS_AS(parse_config_text("{nope"), ConfigError);
  }
  SUBCASE("wrong type names the field") {
    const char* text = R"({"solver": {"m": 0.4, "tau": "one"}})";
    try {
      parse_config_text(text);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.field() == "solver.tau");
    }
  }
  SUBCASE("unknown enum values name the field") {
    const char* text =
        R"({"solver": {"m": 0.4, "tau": 1.0, "theta_mode": "magic"}})";
    try {
      parse_config_text(text);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.field() == "solver.theta_mode");
    }
  }
  SUBCASE("full-kernel mode requires a kernel section") {
    const char* text =
        R"({"solver": {"m": 0.4, "tau": 1.0, "decoherence": {"mode": "full-kernel"}}})";
    try {
      parse_config_text(text);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.field() == "kernel.variant");
    }
  }
  SUBCASE("cross-validate restricts the scenario shape") {
    const char* text = R"({
      "mode": "cross-validate",
      "solver": {"m": 0.4, "tau": 1.0,
                 "decoherence": {"mode": "jacoboni-bordone", "lambda": 1.0}},
      "potential": {"variant": "harmonic", "kappa": 1.0}
    })";
    try {
      parse_config_text(text);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.field() == "solver.decoherence.mode");
    }
  }
  SUBCASE("a well-formed config parses") {
    const RunConfig cfg = parse_config_text(kCrossvalConfig);
    CHECK(cfg.mode == RunMode::CrossValidate);
    CHECK(cfg.scenario == "crossval-smoke");
    CHECK(cfg.grid.n_x == 128);
    CHECK(std::holds_alternative<DecoFokkerPlanck>(cfg.solver.decoherence));
    CHECK(std::holds_alternative<HarmonicPotential>(cfg.potential));
  }
}

TEST_CASE("gaussian fit") {
  const PhaseGrid g(-16, 16, 128, -16, 16, 128);

  SUBCASE("round-trip recovers the parameters") {
    const GaussianParams p{1.0, 0.3, 2.0, 0.5};
    const GaussianFit fit = fit_gaussian(gaussian_state(p, g));
    CHECK(fit.params.A == doctest::Approx(p.A).epsilon(1e-8));
    CHECK(fit.params.B == doctest::Approx(p.B).epsilon(1e-8));
    CHECK(fit.params.C == doctest::Approx(p.C).epsilon(1e-8));
    CHECK(fit.params.D == doctest::Approx(p.D).epsilon(1e-8));
    CHECK(fit.residual < 1e-10);
    CHECK(fit.n_nonpositive == 0);
  }
  SUBCASE("free-streamed gaussian obeys the exact transport map") {
    const GaussianParams p{1.0, 0.0, 1.0, 0.2};
    const double t = 1.0, m = 0.4;
    SolverConfig cfg;
    cfg.m = m;
    cfg.dt = 1e-2;
    WignerSolver solver(g, cfg, ZeroPotential{});
    WignerState s = gaussian_state(p, g);
    for (int k = 0; k < 100; ++k) solver.step(s);
    const GaussianParams expect = p.free_streamed(t, m);
    const GaussianFit fit = fit_gaussian(s);
    CHECK(fit.params.A == doctest::Approx(expect.A).epsilon(1e-7));
    CHECK(fit.params.B == doctest::Approx(expect.B).epsilon(1e-7).scale(1e-10));
    CHECK(fit.params.C == doctest::Approx(expect.C).epsilon(1e-7));
    CHECK(fit.residual < 1e-7);
  }
  SUBCASE("two separated gaussians are flagged non-gaussian") {
    WignerState s(g);
    for (int i = 0; i < g.n_x(); ++i) {
      for (int j = 0; j < g.n_p(); ++j) {
        const double x = g.x(i), p = g.p(j);
        s.at(i, j) = std::exp(-((x - 4) * (x - 4) + p * p)) +
                     std::exp(-((x + 4) * (x + 4) + p * p));
      }
    }
    const GaussianFit fit = fit_gaussian(s);
    CHECK(fit.residual > 1e-2);
  }
}

TEST_CASE("state snapshot round-trip") {
  const PhaseGrid g(-8, 8, 32, -12, 12, 64, 0.7);
  WignerState s = gaussian_state(GaussianParams{1, 0.1, 1, 0}, g, 1e-6);
  s.time = 1.25;
  const std::string dir = tmp_dir("snapshot");
  csv::write_state(dir + "/state.csv", s);
  const WignerState r = csv::read_state(dir + "/state.csv");
  CHECK(r.grid.same_shape(g));
  CHECK(r.time == s.time);
  for (std::size_t k = 0; k < s.w.size(); ++k) {
    CHECK(r.w[k] == s.w[k]);  // %.17g round-trips doubles exactly
  }
}

TEST_CASE("figures scenarios") {
  const std::string dir = tmp_dir("figures");
  run_figures(dir);
  for (const char* name : {"fig1.csv", "fig2.csv", "fig3.csv", "plot_figures.py"}) {
    CHECK(fs::exists(fs::path(dir) / name));
  }
  // final row of fig2 sits on the equilibrium
  const std::string fig2 = slurp(dir + "/fig2.csv");
  const auto last_line_start = fig2.rfind('\n', fig2.size() - 2);
  std::stringstream row(fig2.substr(last_line_start + 1));
  std::string cell;
  std::vector<double> vals;
  while (std::getline(row, cell, ',')) vals.push_back(std::stod(cell));
  REQUIRE(vals.size() == 7);
  CHECK(vals[0] == doctest::Approx(50.0));
  CHECK(std::abs(vals[1] - 0.25) < 1e-5);
  CHECK(std::abs(vals[2]) < 1e-5);
  CHECK(std::abs(vals[3] - 0.1) < 1e-5);

  SUBCASE("figures are bit-identical across runs") {
    const std::string dir2 = tmp_dir("figures2");
    run_figures(dir2);
    for (const char* name : {"fig1.csv", "fig2.csv", "fig3.csv"}) {
      CHECK(slurp(dir + "/" + name) == slurp(dir2 + "/" + name));
    }
  }
}

TEST_CASE("pde scenario runner") {
  RunConfig cfg;
  cfg.mode = RunMode::Pde;
  cfg.scenario = "smoke";
  cfg.grid = GridConfig{-16, 16, 64, -16, 16, 64};
  cfg.solver.m = 0.4;
  cfg.solver.dt = 1e-2;
  cfg.t_end = 0.1;
  cfg.solver.decoherence = DecoFokkerPlanck{1.0};
  cfg.potential = HarmonicPotential{1.0};
  cfg.kernel.variant = KernelConfig::Variant::PeakedGaussian;
  cfg.kernel.sigma = 1.0;
  cfg.kernel.r0_sq = 1.0;
  cfg.output.snapshot_every = 5;
  cfg.output.dump_kernel = true;

  const std::string dir = tmp_dir("pde");
  const PdeRunResult r = run_pde(cfg, dir);
  CHECK(r.steps == 10);
  CHECK(std::abs(r.final_mass - r.initial_mass) < 1e-10 * r.initial_mass);
  CHECK(fs::exists(fs::path(dir) / "moments_000000.csv"));
  CHECK(fs::exists(fs::path(dir) / "moments_000005.csv"));
  CHECK(fs::exists(fs::path(dir) / "moments_000010.csv"));
  CHECK(fs::exists(fs::path(dir) / "state_final.csv"));
  CHECK(fs::exists(fs::path(dir) / "kernel_lambda.csv"));
  CHECK(fs::exists(fs::path(dir) / "kernel_gamma.csv"));

  SUBCASE("moments output is bit-identical across reruns") {
    const std::string dir2 = tmp_dir("pde2");
    run_pde(cfg, dir2);
    CHECK(slurp(dir + "/moments_000010.csv") == slurp(dir2 + "/moments_000010.csv"));
    CHECK(slurp(dir + "/state_final.csv") == slurp(dir2 + "/state_final.csv"));
  }

  SUBCASE("grid-dump initial state reloads") {
    RunConfig cfg2 = cfg;
    cfg2.initial_state.from_file = true;
    cfg2.initial_state.path = dir + "/state_final.csv";
    const std::string dir3 = tmp_dir("pde3");
    const PdeRunResult r3 = run_pde(cfg2, dir3);
    CHECK(r3.steps == 10);
  }
}

TEST_CASE("cross-validation scenario smoke run") {
  const RunConfig cfg = parse_config_text(kCrossvalConfig);
  const std::string dir = tmp_dir("crossval");
  const CrossValResult r = run_cross_validation(cfg, dir);
  CHECK(r.snapshots >= 5);
  CHECK(r.max_rel_overall < 1e-3);
  CHECK(r.worst_fit_residual < 1e-2);  // non-gaussianity flag, not a precision metric
  CHECK(fs::exists(fs::path(dir) / "crossval.csv"));
  CHECK(fs::exists(fs::path(dir) / "crossval_summary.csv"));
}

TEST_CASE("tabulated environment file round-trip") {
  const std::string dir = tmp_dir("env");
  {
    std::ofstream f(dir + "/env.csv");
    f << "k,r_sq,re_chi,im_chi\n";
    const int n = 512;
    const double k0 = 0.8, sigma = 1.0;
    for (int i = 0; i < n; ++i) {
      const double k = k0 - 5.0 + 10.0 * i / (n - 1);
      const double chi = std::pow(2.0 * sigma * sigma / M_PI, 0.25) *
                         std::exp(-sigma * sigma * (k - k0) * (k - k0));
      f << csv::format_double(k) << ",0.5," << csv::format_double(chi) << ",0\n";
    }
  }
  const TabulatedEnv env = read_tabulated_env(dir + "/env.csv");
  CHECK(env.k_grid.size() == 512);
  CHECK(env.t_of_k.empty());
  const XiGrid xi{128, 0.1};
  const DecoherenceKernel k = build_kernel(env, xi, 1.0);
  CHECK(k.lambda1() == doctest::Approx(2.0 * 0.8 * 0.5).epsilon(1e-6));
}
