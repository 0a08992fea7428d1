#include "delta_atom/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "delta_atom/errors.hpp"

namespace delta_atom::cfg {

using nlohmann::json;

namespace {

enum class Kind { number, integer, uint, string, number_array, object };

struct Field {
  Kind kind;
  json fallback;
};

using Schema = std::map<std::string, Field>;

const std::map<std::string, Schema>& sections() {
  static const std::map<std::string, Schema> s = [] {
    const ModelConfig m;
    const NumericsConfig n;
    const FluxConfig f;
    const FntConfig t;
    const CatConfig c;
    const CoherentConfig h;
    std::map<std::string, Schema> out;
    out["model"] = {{"delta_e", {Kind::number, m.delta_e}},
                    {"g", {Kind::number, m.g}},
                    {"G", {Kind::number, m.G}},
                    {"lambda", {Kind::number, m.lambda}},
                    {"omega", {Kind::number, m.omega}},
                    {"Omega_c", {Kind::number, m.Omega_c}},
                    {"theta_divisors", {Kind::number_array, m.theta_divisors}}};
    out["numerics"] = {{"fock_dim", {Kind::integer, n.fock_dim}},
                       {"time_samples", {Kind::integer, n.time_samples}},
                       {"grid_n", {Kind::integer, n.grid_n}},
                       {"stencil_order", {Kind::integer, n.stencil_order}},
                       {"k_levels", {Kind::integer, n.k_levels}},
                       {"solver_tol", {Kind::number, n.solver_tol}}};
    out["flux"] = {{"E_J", {Kind::number, f.E_J}},
                   {"alpha", {Kind::number, f.alpha}},
                   {"mass_ratio", {Kind::number, f.mass_ratio}},
                   {"f_min", {Kind::number, f.f_min}},
                   {"f_max", {Kind::number, f.f_max}},
                   {"f_step", {Kind::number, f.f_step}}};
    out["fnt"] = {{"instances", {Kind::integer, t.instances}},
                  {"dim_min", {Kind::integer, t.dim_min}},
                  {"dim_max", {Kind::integer, t.dim_max}},
                  {"ratio_min", {Kind::number, t.ratio_min}},
                  {"ratio_max", {Kind::number, t.ratio_max}}};
    out["cat"] = {{"detuning_ratio", {Kind::number, c.detuning_ratio}},
                  {"G_over_g", {Kind::number, c.G_over_g}},
                  {"theta_divisor", {Kind::number, c.theta_divisor}},
                  {"periods", {Kind::number, c.periods}}};
    out["coherent"] = {{"theta_divisor", {Kind::number, h.theta_divisor}},
                       {"periods", {Kind::number, h.periods}}};
    return out;
  }();
  return s;
}

const Schema& top_level() {
  static const Schema s = {{"experiment", {Kind::string, nullptr}},
                           {"units", {Kind::string, nullptr}},
                           {"seed", {Kind::uint, RunConfig{}.seed}},
                           {"output_path", {Kind::string, ""}}};
  return s;
}

bool matches(Kind k, const json& v) {
  switch (k) {
    case Kind::number: return v.is_number();
    case Kind::integer: return v.is_number_integer();
    case Kind::uint: return v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0);
    case Kind::string: return v.is_string();
    case Kind::number_array:
      if (!v.is_array()) return false;
      for (const auto& x : v) {
        if (!x.is_number()) return false;
      }
      return true;
    case Kind::object: return v.is_object();
  }
  return false;
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::number: return "a number";
    case Kind::integer: return "an integer";
    case Kind::uint: return "a non-negative integer";
    case Kind::string: return "a string";
    case Kind::number_array: return "an array of numbers";
    case Kind::object: return "an object";
  }
  return "?";
}

void check_type(const std::string& path, Kind k, const json& v) {
  if (!matches(k, v)) {
    throw ValidationError("config: key '" + path + "' must be " + kind_name(k) + ", got " + v.dump());
  }
}

// Validates structure, returns the input merged over defaults.
json resolve(const json& in) {
  if (!in.is_object()) throw ValidationError("config: top level must be a JSON object");
  json out = json::object();
  for (const auto& [key, field] : top_level()) {
    if (!field.fallback.is_null()) out[key] = field.fallback;
  }
  for (const auto& [name, schema] : sections()) {
    json sec = json::object();
    for (const auto& [key, field] : schema) sec[key] = field.fallback;
    out[name] = sec;
  }
  for (const auto& [key, value] : in.items()) {
    if (auto it = top_level().find(key); it != top_level().end()) {
      check_type(key, it->second.kind, value);
      out[key] = value;
      continue;
    }
    auto sit = sections().find(key);
    if (sit == sections().end()) throw ValidationError("config: unknown key '" + key + "'");
    check_type(key, Kind::object, value);
    for (const auto& [sub, v] : value.items()) {
      const std::string path = key + "." + sub;
      auto fit = sit->second.find(sub);
      if (fit == sit->second.end()) throw ValidationError("config: unknown key '" + path + "'");
      check_type(path, fit->second.kind, v);
      out[key][sub] = v;
    }
  }
  return out;
}

void apply_override(json& doc, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ValidationError("config: override '" + spec + "' is not of the form key=value");
  }
  const std::string key = spec.substr(0, eq);
  const std::string raw = spec.substr(eq + 1);
  json value = json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;
  json* node = &doc;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (part.empty()) throw ValidationError("config: override key '" + key + "' is malformed");
    if (!node->is_object()) throw ValidationError("config: override key '" + key + "' is malformed");
    if (dot == std::string::npos) {
      (*node)[part] = value;
      return;
    }
    if (!node->contains(part)) (*node)[part] = json::object();
    node = &(*node)[part];
    start = dot + 1;
  }
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError("config: " + msg);
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

bool is_flux(Experiment e) { return e == Experiment::selection_rules || e == Experiment::spectrum; }
bool is_model(Experiment e) {
  return e == Experiment::fig5 || e == Experiment::cat || e == Experiment::coherent;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"fig5", "cat", "coherent", "selection-rules",
                                              "fnt-check", "spectrum"};
  return names;
}

std::string to_string(Experiment e) { return experiment_names()[static_cast<std::size_t>(e)]; }

Experiment parse_experiment(const std::string& name) {
  const auto& names = experiment_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<Experiment>(i);
  }
  throw ValidationError("config: unknown experiment '" + name + "'");
}

RunConfig parse_config(const std::string& text, const std::vector<std::string>& overrides,
                       const std::string& experiment) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("config: parse error at " + line_column(text, e.byte) + ": " + e.what());
  }
  for (const auto& o : overrides) apply_override(doc, o);

  if (!experiment.empty()) {
    if (doc.is_object() && doc.contains("experiment") && doc["experiment"].is_string() &&
        doc["experiment"].get<std::string>() != experiment) {
      throw ValidationError("config: experiment '" + doc["experiment"].get<std::string>() +
                            "' conflicts with requested '" + experiment + "'");
    }
    if (doc.is_object()) doc["experiment"] = experiment;
  }
  const bool has_physics = doc.is_object() && (doc.contains("model") || doc.contains("flux"));
  json r = resolve(doc);
  if (!r.contains("experiment")) throw ValidationError("config: missing key 'experiment'");

  RunConfig c;
  c.experiment = parse_experiment(r["experiment"].get<std::string>());
  const std::string natural = is_flux(c.experiment) ? "E_J" : "lambda";
  if (!r.contains("units")) {
    require(!has_physics, "key 'units' is required when a 'model' or 'flux' block is given");
    r["units"] = natural;
  }
  c.units = r["units"].get<std::string>();
  require(c.units == "lambda" || c.units == "E_J", "units must be \"lambda\" or \"E_J\"");
  if (is_flux(c.experiment) || is_model(c.experiment)) {
    require(c.units == natural, "experiment " + to_string(c.experiment) + " requires units \"" +
                                    natural + "\"");
  }
  c.seed = r["seed"].get<std::uint64_t>();
  c.output_path = r["output_path"].get<std::string>();

  const json& m = r["model"];
  c.model.delta_e = m["delta_e"];
  c.model.g = m["g"];
  c.model.G = m["G"];
  c.model.lambda = m["lambda"];
  c.model.omega = m["omega"];
  c.model.Omega_c = m["Omega_c"];
  c.model.theta_divisors = m["theta_divisors"].get<std::vector<double>>();
  require(!c.model.theta_divisors.empty(), "model.theta_divisors must not be empty");
  for (double k : c.model.theta_divisors) require(k > 1.0, "model.theta_divisors entries must be > 1");
  require(c.model.lambda != 0.0 || !is_model(c.experiment), "model.lambda must be nonzero");

  const json& n = r["numerics"];
  c.numerics.fock_dim = n["fock_dim"];
  c.numerics.time_samples = n["time_samples"];
  c.numerics.grid_n = n["grid_n"];
  c.numerics.stencil_order = n["stencil_order"];
  c.numerics.k_levels = n["k_levels"];
  c.numerics.solver_tol = n["solver_tol"];
  require(c.numerics.fock_dim >= 2, "numerics.fock_dim must be >= 2");
  require(c.numerics.time_samples >= 2, "numerics.time_samples must be >= 2");
  require(c.numerics.grid_n >= 16 && c.numerics.grid_n % 2 == 0,
          "numerics.grid_n must be even and >= 16");
  require(c.numerics.stencil_order == 2 || c.numerics.stencil_order == 4,
          "numerics.stencil_order must be 2 or 4");
  require(c.numerics.k_levels >= 3, "numerics.k_levels must be >= 3");
  require(c.numerics.solver_tol > 0.0, "numerics.solver_tol must be > 0");

  const json& f = r["flux"];
  c.flux.E_J = f["E_J"];
  c.flux.alpha = f["alpha"];
  c.flux.mass_ratio = f["mass_ratio"];
  c.flux.f_min = f["f_min"];
  c.flux.f_max = f["f_max"];
  c.flux.f_step = f["f_step"];
  require(c.flux.E_J > 0.0, "flux.E_J must be > 0");
  require(c.flux.alpha > 0.0 && c.flux.alpha < 2.0, "flux.alpha must lie in (0, 2)");
  require(c.flux.mass_ratio > 0.0, "flux.mass_ratio must be > 0");
  require(c.flux.f_step > 0.0, "flux.f_step must be > 0");
  require(c.flux.f_max >= c.flux.f_min, "flux.f_max must be >= flux.f_min");

  const json& t = r["fnt"];
  c.fnt.instances = t["instances"];
  c.fnt.dim_min = t["dim_min"];
  c.fnt.dim_max = t["dim_max"];
  c.fnt.ratio_min = t["ratio_min"];
  c.fnt.ratio_max = t["ratio_max"];
  require(c.fnt.instances >= 1, "fnt.instances must be >= 1");
  require(c.fnt.dim_min >= 2 && c.fnt.dim_max >= c.fnt.dim_min, "fnt dims must satisfy 2 <= dim_min <= dim_max");
  require(c.fnt.ratio_min > 0.0 && c.fnt.ratio_max >= c.fnt.ratio_min && c.fnt.ratio_max < 1.0,
          "fnt ratios must satisfy 0 < ratio_min <= ratio_max < 1");

  const json& k = r["cat"];
  c.cat.detuning_ratio = k["detuning_ratio"];
  c.cat.G_over_g = k["G_over_g"];
  c.cat.theta_divisor = k["theta_divisor"];
  c.cat.periods = k["periods"];
  require(c.cat.detuning_ratio > 0.0, "cat.detuning_ratio must be > 0");
  require(c.cat.theta_divisor > 1.0, "cat.theta_divisor must be > 1");
  require(c.cat.periods > 0.0, "cat.periods must be > 0");

  const json& h = r["coherent"];
  c.coherent.theta_divisor = h["theta_divisor"];
  c.coherent.periods = h["periods"];
  require(c.coherent.theta_divisor > 1.0, "coherent.theta_divisor must be > 1");
  require(c.coherent.periods > 0.0, "coherent.periods must be > 0");

  c.resolved = std::move(r);
  return c;
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides,
                      const std::string& experiment) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("config: cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("config: error reading '" + path + "'");
  return parse_config(ss.str(), overrides, experiment);
}

}  // namespace delta_atom::cfg
