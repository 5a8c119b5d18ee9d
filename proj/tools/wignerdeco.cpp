// Scenario runner for the decoherence Wigner equation: kernel construction,
// phase-space PDE and gaussian-ansatz ODE runs, PDE/ODE cross-validation, and
// the built-in figure scenarios. Exit codes: 0 ok, 1 config error, 2 runtime
// error.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "wigner/config.hpp"
#include "wigner/scenario.hpp"

namespace {

std::string outdir_override(const std::string& cli_value) {
  if (!cli_value.empty()) return cli_value;
  if (const char* env = std::getenv("WIGNERDECO_OUTDIR")) return env;
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wignerdeco - decoherence Wigner equation scenarios"};
  app.require_subcommand(1);

  std::string config_path, validate_path, figures_dir, outdir;

  CLI::App* run = app.add_subcommand("run", "execute a scenario configuration");
  run->add_option("config", config_path, "JSON run configuration")->required();
  run->add_option("--outdir", outdir, "override the configured output directory");

  CLI::App* figures = app.add_subcommand("figures", "run the built-in gaussian-ansatz scenarios");
  figures->add_option("outdir", figures_dir, "output directory")->required();

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a configuration");
  validate->add_option("config", validate_path, "JSON run configuration")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (figures->parsed()) {
      wigner::run_figures(figures_dir);
      std::cout << "figures written to " << figures_dir << "\n";
      return 0;
    }
    if (validate->parsed()) {
      const wigner::RunConfig cfg = wigner::load_config(validate_path);
      std::cout << "config ok: scenario '" << cfg.scenario << "'\n";
      return 0;
    }
    const wigner::RunConfig cfg = wigner::load_config(config_path);
    return wigner::run_scenario(cfg, outdir_override(outdir));
  } catch (const wigner::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
