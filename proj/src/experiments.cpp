#include "delta_atom/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>

#include "delta_atom/dynamics.hpp"
#include "delta_atom/fluxqubit.hpp"
#include "delta_atom/fnt.hpp"

namespace delta_atom::exp {

using std::numbers::pi;

namespace {

ResultTable make_table(const cfg::RunConfig& c, std::vector<std::string> header) {
  ResultTable t(std::move(header));
  t.experiment = cfg::to_string(c.experiment);
  t.config = c.resolved;
  return t;
}

std::string divisor_label(double k) { return format_double(k); }

std::vector<double> flux_grid(const cfg::FluxConfig& f) {
  const long n = std::lround((f.f_max - f.f_min) / f.f_step);
  std::vector<double> out;
  for (long i = 0; i <= n; ++i) out.push_back(f.f_min + static_cast<double>(i) * f.f_step);
  return out;
}

flux::FluxParams flux_params(const cfg::RunConfig& c, double f) {
  return {c.flux.E_J, c.flux.alpha, f, c.flux.mass_ratio};
}

flux::Grid2D flux_grid2d(const cfg::RunConfig& c) {
  return {c.numerics.grid_n, c.numerics.grid_n, c.numerics.stencil_order};
}

flux::SpectrumOptions spectrum_options(const cfg::RunConfig& c) {
  flux::SpectrumOptions o;
  o.solver.tol = c.numerics.solver_tol;
  o.solver.seed = c.seed;
  return o;
}

// Runs body(i) for i in [0, n) in parallel; the first failure (lowest i) is rethrown.
template <class Body>
void parallel_for(long n, Body&& body) {
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

model::ModelParams params_for_theta(const cfg::ModelConfig& m, double divisor) {
  const double theta = pi / divisor;
  const double delta_c = 2.0 * m.lambda * std::cos(theta) / std::sin(theta);
  return model::ModelParams::from_detunings(m.delta_e, delta_c, m.g, m.G, m.lambda, m.omega,
                                            m.Omega_c);
}

model::ModelParams cat_params(const cfg::RunConfig& c) {
  model::ModelParams p = params_for_theta(c.model, c.cat.theta_divisor);
  const model::DressedParams d0 = model::dressed_params(p);
  const double dmin = std::min(std::abs(d0.Delta_plus), std::abs(d0.Delta_minus));
  p.g = dmin / (c.cat.detuning_ratio * std::max(std::abs(d0.cos_half), std::abs(d0.sin_half)));
  p.G = c.cat.G_over_g * p.g;
  return p;
}

double slow_period(const model::DressedParams& dp) {
  const double w = std::min(std::abs(dp.Omega_A), std::abs(dp.Omega_B));
  if (!(w > 0.0)) throw ValidationError("slow_period: a Stark shift vanishes");
  return 2.0 * pi / w;
}

ResultTable run_fig5(const cfg::RunConfig& c) {
  std::vector<model::DressedParams> ds;
  double period = 0.0;
  double amp = 0.0;
  for (double k : c.model.theta_divisors) {
    ds.push_back(model::dressed_params(params_for_theta(c.model, k)));
    period = std::max(period, slow_period(ds.back()));
    amp = std::max({amp, 2.0 * std::abs(ds.back().xi), 2.0 * std::abs(ds.back().zeta)});
  }
  const int fock = num::fock_dim_for_amplitude(amp, c.numerics.fock_dim);
  const std::vector<double> times = dyn::uniform_times(period, c.numerics.time_samples);

  std::vector<std::string> header{"g_t"};
  for (double k : c.model.theta_divisors) header.push_back("y_pi_" + divisor_label(k));
  for (double k : c.model.theta_divisors) header.push_back("y_fock_pi_" + divisor_label(k));
  ResultTable table = make_table(c, header);

  const long n = static_cast<long>(times.size());
  const std::size_t nd = ds.size();
  std::vector<std::vector<double>> rows(times.size(), std::vector<double>(header.size()));
  parallel_for(n, [&](long i) {
    const double t = times[static_cast<std::size_t>(i)];
    auto& row = rows[static_cast<std::size_t>(i)];
    row[0] = c.model.g * t;
    for (std::size_t j = 0; j < nd; ++j) {
      row[1 + j] = dyn::overlap_y(ds[j], t);
      row[1 + nd + j] = dyn::overlap_y_fock(ds[j], t, fock);
    }
  });
  for (auto& r : rows) table.add_row(std::move(r));
  return table;
}

ResultTable run_cat(const cfg::RunConfig& c) {
  const model::ModelParams p = cat_params(c);
  const model::DressedParams dp = model::dressed_params(p);
  const int fock = num::fock_dim_for_amplitude(2.0 * std::max(std::abs(dp.xi), std::abs(dp.zeta)),
                                               c.numerics.fock_dim);
  const num::HilbertSpace space(fock);
  const std::vector<double> times =
      dyn::uniform_times(c.cat.periods * slow_period(dp), c.numerics.time_samples);
  const num::QuantumState psi0 = num::QuantumState::basis(space.total_dim(), space.index(num::Level::b, 0));
  dyn::CompareOptions opt;
  opt.analytic_cat = true;
  const dyn::Trajectory tr = dyn::evolve_and_compare(p, space, psi0, times, opt);

  ResultTable table = make_table(c, {"t", "fidelity", "fidelity_full", "fidelity_effective", "y",
                                     "pop_b", "pop_c", "pop_e", "abs_alpha_plus", "abs_alpha_minus"});
  const auto& o = tr.observables;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const dyn::CatState cs = dyn::cat_evolution(dp, times[i]);
    table.add_row({times[i], o.at("cat_fidelity")[i], o.at("cat_fidelity_full")[i],
                   o.at("fidelity")[i], o.at("y")[i], o.at("pop_b")[i], o.at("pop_c")[i],
                   o.at("pop_e")[i], std::abs(cs.alpha_plus), std::abs(cs.alpha_minus)});
  }
  return table;
}

ResultTable run_coherent(const cfg::RunConfig& c) {
  const model::ModelParams p = params_for_theta(c.model, c.coherent.theta_divisor);
  const model::DressedParams dp = model::dressed_params(p);
  const int fock = num::fock_dim_for_amplitude(2.0 * std::abs(dp.zeta), c.numerics.fock_dim);
  const num::HilbertSpace space(fock);
  const num::Operator h_minus = model::effective_hamiltonians(p, space).H_minus;
  const num::Propagator prop(h_minus);
  const num::Operator n_op = num::boson_number(fock);
  const num::QuantumState vac = num::QuantumState::basis(fock, 0);
  const std::vector<double> times =
      dyn::uniform_times(c.coherent.periods * 2.0 * pi / std::abs(dp.Omega_B), c.numerics.time_samples);

  ResultTable table = make_table(c, {"t", "N_analytic", "N_exact", "r_derivative", "r_paper"});
  for (double t : times) {
    const double exact = prop.evolve(vac, t).expectation(n_op).real();
    const dyn::Rate r = dyn::generation_rate(dp, t);
    table.add_row({t, dyn::photon_number(dp, t), exact, r.derivative, r.printed});
  }
  return table;
}

ResultTable run_selection_rules(const cfg::RunConfig& c) {
  const std::vector<double> fs = flux_grid(c.flux);
  const flux::Grid2D grid = flux_grid2d(c);
  const flux::SpectrumOptions opt = spectrum_options(c);
  std::vector<std::vector<double>> rows(fs.size());
  const long n = static_cast<long>(fs.size());
  parallel_for(n, [&](long i) {
    const flux::FluxParams fp = flux_params(c, fs[static_cast<std::size_t>(i)]);
    const flux::LevelData lv = flux::spectrum_2d(fp, grid, c.numerics.k_levels, opt);
    const Eigen::Matrix3cd t = flux::transition_elements(lv, fp);
    const double bc = std::abs(t(0, 1));
    const double ce = std::abs(t(1, 2));
    const double eb = std::abs(t(2, 0));
    rows[static_cast<std::size_t>(i)] = {fp.f, bc, ce, eb, bc * ce * eb};
  });
  ResultTable table = make_table(c, {"f", "abs_t_bc", "abs_t_ce", "abs_t_eb", "abs_product"});
  for (auto& r : rows) table.add_row(std::move(r));
  return table;
}

ResultTable run_spectrum(const cfg::RunConfig& c) {
  const std::vector<double> fs = flux_grid(c.flux);
  const flux::Grid2D grid = flux_grid2d(c);
  const flux::SpectrumOptions opt = spectrum_options(c);
  std::vector<std::vector<double>> rows(fs.size());
  const long n = static_cast<long>(fs.size());
  parallel_for(n, [&](long i) {
    const flux::FluxParams fp = flux_params(c, fs[static_cast<std::size_t>(i)]);
    const flux::LevelData lv = flux::spectrum_2d(fp, grid, c.numerics.k_levels, opt);
    rows[static_cast<std::size_t>(i)] = {fp.f, lv.energies(0), lv.energies(1), lv.energies(2)};
  });
  ResultTable table = make_table(c, {"f", "E_b", "E_c", "E_e"});
  for (auto& r : rows) table.add_row(std::move(r));
  return table;
}

ResultTable run_fnt_check(const cfg::RunConfig& c) {
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<int> dim_dist(c.fnt.dim_min, c.fnt.dim_max);
  std::uniform_real_distribution<double> ratio_dist(c.fnt.ratio_min, c.fnt.ratio_max);
  std::vector<fnt::RandomInstance> inst;
  for (int i = 0; i < c.fnt.instances; ++i) {
    const int dim = dim_dist(rng);
    const double ratio = ratio_dist(rng);
    inst.push_back(fnt::random_instance(rng, dim, ratio));
  }

  auto energy_error = [](const fnt::Decomposition& d, const fnt::FNTResult& r) {
    const num::RealVector exact = num::hermitian_eig(d.H0 + d.H1).eigenvalues;
    std::vector<double> e2(r.series.energies_2nd.data(),
                           r.series.energies_2nd.data() + r.series.energies_2nd.size());
    std::sort(e2.begin(), e2.end());
    double err = 0.0;
    for (std::size_t k = 0; k < e2.size(); ++k) {
      err = std::max(err, std::abs(e2[k] - exact(static_cast<Eigen::Index>(k))));
    }
    return err;
  };

  std::vector<std::vector<double>> rows(inst.size());
  const long n = static_cast<long>(inst.size());
  parallel_for(n, [&](long i) {
    const fnt::RandomInstance& ri = inst[static_cast<std::size_t>(i)];
    const fnt::FNTResult r = fnt::run(ri.d);
    const double h1 = num::operator_norm(ri.d.H1);
    const fnt::Decomposition half = fnt::scaled(ri.d, 0.5);
    const fnt::FNTResult rh = fnt::run(half);
    rows[static_cast<std::size_t>(i)] = {static_cast<double>(i),
                                         static_cast<double>(ri.d.H0.dim()),
                                         ri.ratio,
                                         r.residual / h1,
                                         energy_error(ri.d, r),
                                         h1 * h1 * h1 / (ri.min_gap * ri.min_gap),
                                         energy_error(half, rh)};
  });
  ResultTable table = make_table(c, {"instance", "dim", "ratio", "residual", "energy_error",
                                     "error_bound", "energy_error_half"});
  for (auto& r : rows) table.add_row(std::move(r));
  return table;
}

ResultTable run_experiment(const cfg::RunConfig& c) {
  switch (c.experiment) {
    case cfg::Experiment::fig5: return run_fig5(c);
    case cfg::Experiment::cat: return run_cat(c);
    case cfg::Experiment::coherent: return run_coherent(c);
    case cfg::Experiment::selection_rules: return run_selection_rules(c);
    case cfg::Experiment::fnt_check: return run_fnt_check(c);
    case cfg::Experiment::spectrum: return run_spectrum(c);
  }
  throw ValidationError("run_experiment: unknown experiment");
}

}  // namespace delta_atom::exp
