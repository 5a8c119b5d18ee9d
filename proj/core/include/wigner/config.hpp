#pragma once

#include <stdexcept>
#include <string>

#include "wigner/gaussian.hpp"
#include "wigner/grids.hpp"
#include "wigner/potential.hpp"
#include "wigner/scattering.hpp"
#include "wigner/solver.hpp"

namespace wigner {

// Configuration problem tied to a named field; the CLI reports the field and
// exits with status 1.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error("config field '" + field + "': " + message),
        field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class RunMode { Pde, Ode, CrossValidate, Figures };

struct GridConfig {
  double x_min = -32.0, x_max = 32.0;
  int n_x = 256;
  double p_min = -32.0, p_max = 32.0;
  int n_p = 256;
};

struct KernelConfig {
  enum class Variant { None, PeakedGaussian, Lorentzian, Tabulated };
  Variant variant = Variant::None;
  double k0 = 0.0, sigma = 1.0, r0_sq = 1.0;  // peaked-gaussian
  double lambda_c = 1.0, p0 = 0.0;            // lorentzian
  std::string path;                           // tabulated scattering CSV
};

struct InitialStateConfig {
  bool from_file = false;
  std::string path;
  GaussianParams gaussian;
  bool normalize_mass = true;  // replace D so the initial mass is 1
};

struct OutputConfig {
  std::string directory = "out";
  int snapshot_every = 100;
  bool dump_states = true;
  bool dump_kernel = false;
};

struct RunConfig {
  std::string scenario = "unnamed";
  RunMode mode = RunMode::Pde;
  unsigned long seed = 0;  // reserved for randomized scenarios; fixed for determinism
  double t_end = 5.0;
  GridConfig grid;
  SolverConfig solver;
  PotentialSpec potential = ZeroPotential{};
  KernelConfig kernel;
  InitialStateConfig initial_state;
  OutputConfig output;

  PhaseGrid make_grid() const {
    return PhaseGrid(grid.x_min, grid.x_max, grid.n_x, grid.p_min, grid.p_max, grid.n_p,
                     solver.hbar);
  }
};

// Parses and validates; throws ConfigError naming the offending field.
RunConfig load_config(const std::string& path);
RunConfig parse_config_text(const std::string& text);

// Tabulated scattering data, CSV columns k,r_sq,re_chi,im_chi or
// k,r_sq,re_t,im_t,re_chi,im_chi.
TabulatedEnv read_tabulated_env(const std::string& path);

// Tabulated potential, CSV columns x,V (one row per grid node).
std::vector<double> read_tabulated_potential(const std::string& path);

}  // namespace wigner
