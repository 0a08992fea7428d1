// config.hpp - strict JSON run configuration with defaults and overrides.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace delta_atom::cfg {

enum class Experiment { fig5, cat, coherent, selection_rules, fnt_check, spectrum };

std::string to_string(Experiment e);
// Throws ValidationError for an unknown name.
Experiment parse_experiment(const std::string& name);
const std::vector<std::string>& experiment_names();

struct ModelConfig {
  double delta_e = 3.0;
  double g = 0.8;
  double G = 0.9;
  double lambda = 1.0;
  double omega = 10.0;
  double Omega_c = 20.0;
  std::vector<double> theta_divisors{2.0, 3.0, 4.0};  // theta = pi / k
};

struct NumericsConfig {
  int fock_dim = 32;
  int time_samples = 2000;
  int grid_n = 64;
  int stencil_order = 4;
  int k_levels = 3;
  double solver_tol = 1e-11;
};

struct FluxConfig {
  double E_J = 1.0;
  double alpha = 0.8;
  double mass_ratio = 3.0;
  double f_min = 0.45;
  double f_max = 0.55;
  double f_step = 0.005;
};

struct FntConfig {
  int instances = 100;
  int dim_min = 3;
  int dim_max = 12;
  double ratio_min = 0.02;
  double ratio_max = 0.1;
};

struct CatConfig {
  double detuning_ratio = 10.0;
  double G_over_g = 0.5;
  double theta_divisor = 2.0;
  double periods = 1.0;
};

struct CoherentConfig {
  double theta_divisor = 2.0;
  double periods = 1.0;
};

struct RunConfig {
  Experiment experiment = Experiment::fig5;
  std::string units;
  std::uint64_t seed = 20240531;
  std::string output_path;
  ModelConfig model;
  NumericsConfig numerics;
  FluxConfig flux;
  FntConfig fnt;
  CatConfig cat;
  CoherentConfig coherent;

  nlohmann::json resolved;  // fully resolved config, echoed into outputs
};

// Parses text, applies "dotted.key=value" overrides (value parsed as JSON,
// else taken as a string), validates strictly and fills defaults. If
// experiment is non-empty it selects the experiment and must agree with any
// "experiment" key in the text.
RunConfig parse_config(const std::string& text, const std::vector<std::string>& overrides = {},
                       const std::string& experiment = {});

// Throws IoError if the file cannot be read.
RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {},
                      const std::string& experiment = {});

}  // namespace delta_atom::cfg
