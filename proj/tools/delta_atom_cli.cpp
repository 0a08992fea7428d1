// delta-atom <experiment> --config <path> [--out <path>] [--override key=value ...]
//
// Exit codes: 0 success, 1 validation error, 2 numeric failure, 3 I/O error.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "delta_atom/config.hpp"
#include "delta_atom/errors.hpp"
#include "delta_atom/experiments.hpp"

int main(int argc, char** argv) {
  using namespace delta_atom;

  CLI::App app{"Cyclic three-level atom simulations"};
  std::string experiment;
  std::string config_path;
  std::string out_path;
  std::vector<std::string> overrides;
  app.add_option("experiment", experiment, "Experiment to run")
      ->required()
      ->check(CLI::IsMember(cfg::experiment_names()));
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--out", out_path, "Output CSV path (default: output_path from config, else stdout)");
  app.add_option("--override", overrides, "Override a config value, e.g. model.g=0.7");
  app.set_version_flag("--version", std::string(kVersion));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const cfg::RunConfig c = cfg::load_config(config_path, overrides, experiment);
    const ResultTable table = exp::run_experiment(c);
    const std::string target = out_path.empty() ? c.output_path : out_path;
    if (target.empty()) {
      std::cout << table.to_csv();
      std::cout.flush();
      if (!std::cout) throw IoError("failed to write to stdout");
    } else {
      table.write(target);
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "delta-atom: " << e.what() << '\n';
    return exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << "delta-atom: " << e.what() << '\n';
    return 2;
  }
}
