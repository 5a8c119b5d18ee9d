#include "wigner/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace wigner {

namespace {

using nlohmann::json;

const json* find(const json& root, const std::string& dotted) {
  const json* cur = &root;
  std::stringstream ss(dotted);
  std::string key;
  while (std::getline(ss, key, '.')) {
    if (!cur->is_object() || !cur->contains(key)) return nullptr;
    cur = &(*cur)[key];
  }
  return cur;
}

template <typename T>
T need(const json& root, const std::string& dotted) {
  const json* v = find(root, dotted);
  if (!v) throw ConfigError(dotted, "missing required field");
  try {
    return v->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(dotted, "wrong type");
  }
}

template <typename T>
T get_or(const json& root, const std::string& dotted, T fallback) {
  const json* v = find(root, dotted);
  if (!v) return fallback;
  try {
    return v->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(dotted, "wrong type");
  }
}

RunMode parse_mode(const std::string& s) {
  if (s == "pde") return RunMode::Pde;
  if (s == "ode") return RunMode::Ode;
  if (s == "cross-validate") return RunMode::CrossValidate;
  if (s == "figures") return RunMode::Figures;
  throw ConfigError("mode", "expected one of pde, ode, cross-validate, figures; got '" + s + "'");
}

DecoherenceMode parse_decoherence(const json& root) {
  const std::string mode = get_or<std::string>(root, "solver.decoherence.mode", "none");
  if (mode == "none") return DecoNone{};
  if (mode == "full-kernel") return DecoFullKernel{};
  if (mode == "fokker-planck") {
    return DecoFokkerPlanck{need<double>(root, "solver.decoherence.lambda2")};
  }
  if (mode == "fokker-planck-drift") {
    return DecoFokkerPlanckDrift{need<double>(root, "solver.decoherence.lambda1"),
                                 need<double>(root, "solver.decoherence.lambda2")};
  }
  if (mode == "jacoboni-bordone") {
    return DecoJacoboniBordone{need<double>(root, "solver.decoherence.lambda"),
                               get_or<double>(root, "solver.decoherence.p0", 0.0)};
  }
  throw ConfigError("solver.decoherence.mode", "unknown decoherence mode '" + mode + "'");
}

KernelConfig parse_kernel(const json& root) {
  KernelConfig k;
  if (!find(root, "kernel")) return k;
  const std::string variant = need<std::string>(root, "kernel.variant");
  if (variant == "peaked-gaussian") {
    k.variant = KernelConfig::Variant::PeakedGaussian;
    k.k0 = get_or<double>(root, "kernel.k0", 0.0);
    k.sigma = need<double>(root, "kernel.sigma");
    k.r0_sq = need<double>(root, "kernel.r0_sq");
  } else if (variant == "lorentzian") {
    k.variant = KernelConfig::Variant::Lorentzian;
    k.lambda_c = need<double>(root, "kernel.lambda");
    k.p0 = get_or<double>(root, "kernel.p0", 0.0);
  } else if (variant == "tabulated") {
    k.variant = KernelConfig::Variant::Tabulated;
    k.path = need<std::string>(root, "kernel.path");
  } else {
    throw ConfigError("kernel.variant", "unknown kernel variant '" + variant + "'");
  }
  return k;
}

PotentialSpec parse_potential(const json& root, const RunConfig& cfg) {
  const std::string variant = get_or<std::string>(root, "potential.variant", "zero");
  if (variant == "zero") return ZeroPotential{};
  if (variant == "harmonic") return HarmonicPotential{need<double>(root, "potential.kappa")};
  if (variant == "linear") return LinearPotential{need<double>(root, "potential.F")};
  if (variant == "polynomial") {
    return PolynomialPotential{need<std::vector<double>>(root, "potential.coeffs")};
  }
  if (variant == "tabulated") {
    const std::string path = need<std::string>(root, "potential.path");
    std::vector<double> v = read_tabulated_potential(path);
    if (static_cast<int>(v.size()) != cfg.grid.n_x) {
      throw ConfigError("potential.path", "tabulated potential has " + std::to_string(v.size()) +
                                              " samples, grid has " + std::to_string(cfg.grid.n_x));
    }
    return TabulatedPotential{std::move(v)};
  }
  throw ConfigError("potential.variant", "unknown potential variant '" + variant + "'");
}

void validate_mode_constraints(const RunConfig& cfg) {
  const bool needs_ansatz = cfg.mode == RunMode::Ode || cfg.mode == RunMode::CrossValidate;
  if (needs_ansatz) {
    if (cfg.initial_state.from_file) {
      throw ConfigError("initial_state.type", "gaussian initial data required for this mode");
    }
    const bool ok_pot = std::holds_alternative<ZeroPotential>(cfg.potential) ||
                        std::holds_alternative<HarmonicPotential>(cfg.potential);
    if (!ok_pot) {
      throw ConfigError("potential.variant",
                        "the gaussian-ansatz reduction needs a zero or harmonic potential");
    }
    const bool ok_deco = std::holds_alternative<DecoNone>(cfg.solver.decoherence) ||
                         std::holds_alternative<DecoFokkerPlanck>(cfg.solver.decoherence);
    if (!ok_deco) {
      throw ConfigError("solver.decoherence.mode",
                        "the gaussian-ansatz reduction needs mode none or fokker-planck");
    }
  }
  if (std::holds_alternative<DecoFullKernel>(cfg.solver.decoherence) &&
      cfg.kernel.variant == KernelConfig::Variant::None) {
    throw ConfigError("kernel.variant", "full-kernel decoherence requires a kernel section");
  }
  if (cfg.output.snapshot_every < 1) {
    throw ConfigError("output.snapshot_every", "must be >= 1");
  }
  if (!(cfg.t_end > 0.0)) throw ConfigError("solver.t_end", "must be positive");
  if (!(cfg.solver.dt > 0.0)) throw ConfigError("solver.dt", "must be positive");
  if (!(cfg.solver.m > 0.0)) throw ConfigError("solver.m", "must be positive");
  if (!(cfg.solver.tau > 0.0)) throw ConfigError("solver.tau", "must be positive");
  if (!(cfg.solver.eta >= 0.0)) throw ConfigError("solver.eta", "must be >= 0");
  if (!(cfg.solver.hbar > 0.0)) throw ConfigError("solver.hbar", "must be positive");
  if (!cfg.initial_state.from_file && !cfg.initial_state.gaussian.normalizable()) {
    throw ConfigError("initial_state", "gaussian parameters are not normalizable (4AC - B^2 <= 0)");
  }
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError("<root>", std::string("not valid JSON: ") + e.what());
  }

  RunConfig cfg;
  cfg.scenario = get_or<std::string>(root, "scenario", "unnamed");
  cfg.mode = parse_mode(get_or<std::string>(root, "mode", "pde"));
  cfg.seed = get_or<unsigned long>(root, "seed", 0UL);

  cfg.grid.x_min = get_or<double>(root, "grid.x_min", cfg.grid.x_min);
  cfg.grid.x_max = get_or<double>(root, "grid.x_max", cfg.grid.x_max);
  cfg.grid.n_x = get_or<int>(root, "grid.n_x", cfg.grid.n_x);
  cfg.grid.p_min = get_or<double>(root, "grid.p_min", cfg.grid.p_min);
  cfg.grid.p_max = get_or<double>(root, "grid.p_max", cfg.grid.p_max);
  cfg.grid.n_p = get_or<int>(root, "grid.n_p", cfg.grid.n_p);

  cfg.solver.m = need<double>(root, "solver.m");
  cfg.solver.tau = need<double>(root, "solver.tau");
  cfg.solver.eta = get_or<double>(root, "solver.eta", 0.0);
  cfg.solver.hbar = get_or<double>(root, "solver.hbar", 1.0);
  cfg.solver.dt = get_or<double>(root, "solver.dt", 1e-3);
  cfg.t_end = get_or<double>(root, "solver.t_end", 5.0);
  const std::string theta = get_or<std::string>(root, "solver.theta_mode", "spectral");
  if (theta == "spectral") {
    cfg.solver.theta_mode = ThetaMode::Spectral;
  } else if (theta == "classical-force") {
    cfg.solver.theta_mode = ThetaMode::ClassicalForce;
  } else {
    throw ConfigError("solver.theta_mode", "expected spectral or classical-force, got '" + theta + "'");
  }
  cfg.solver.decoherence = parse_decoherence(root);
  cfg.kernel = parse_kernel(root);
  cfg.potential = parse_potential(root, cfg);

  const std::string init_type = get_or<std::string>(root, "initial_state.type", "gaussian");
  if (init_type == "gaussian") {
    cfg.initial_state.from_file = false;
    cfg.initial_state.gaussian.A = get_or<double>(root, "initial_state.A", 1.0);
    cfg.initial_state.gaussian.B = get_or<double>(root, "initial_state.B", 0.0);
    cfg.initial_state.gaussian.C = get_or<double>(root, "initial_state.C", 1.0);
    cfg.initial_state.gaussian.D = get_or<double>(root, "initial_state.D", 0.0);
    cfg.initial_state.normalize_mass = get_or<bool>(root, "initial_state.normalize_mass", true);
  } else if (init_type == "grid-dump") {
    cfg.initial_state.from_file = true;
    cfg.initial_state.path = need<std::string>(root, "initial_state.path");
  } else {
    throw ConfigError("initial_state.type", "expected gaussian or grid-dump, got '" + init_type + "'");
  }

  cfg.output.directory = get_or<std::string>(root, "output.directory", "out");
  cfg.output.snapshot_every = get_or<int>(root, "output.snapshot_every", 100);
  cfg.output.dump_states = get_or<bool>(root, "output.dump_states", true);
  cfg.output.dump_kernel = get_or<bool>(root, "output.dump_kernel", false);

  validate_mode_constraints(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("<file>", "cannot open config file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

TabulatedEnv read_tabulated_env(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open scattering data: " + path);
  TabulatedEnv env;
  std::string line;
  bool first = true;
  std::size_t n_cols = 0;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (first) {  // header
      first = false;
      n_cols = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
      if (n_cols != 4 && n_cols != 6) {
        throw std::runtime_error("scattering CSV needs 4 or 6 columns, got " +
                                 std::to_string(n_cols) + " in " + path);
      }
      continue;
    }
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != n_cols) throw std::runtime_error("ragged scattering CSV row in " + path);
    env.k_grid.push_back(row[0]);
    env.r_sq.push_back(row[1]);
    if (n_cols == 6) {
      env.t_of_k.emplace_back(row[2], row[3]);
      env.chi_hat.emplace_back(row[4], row[5]);
    } else {
      env.chi_hat.emplace_back(row[2], row[3]);
    }
  }
  return env;
}

std::vector<double> read_tabulated_potential(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open potential samples: " + path);
  std::vector<double> v;
  std::string line;
  bool first = true;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (first) {  // header x,V
      first = false;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("malformed potential CSV: " + path);
    v.push_back(std::stod(line.substr(comma + 1)));
  }
  return v;
}

}  // namespace wigner
