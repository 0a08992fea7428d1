// experiments.hpp - experiment presets producing ResultTables.

#pragma once

#include "delta_atom/config.hpp"
#include "delta_atom/hamiltonians.hpp"
#include "delta_atom/result_table.hpp"

namespace delta_atom::exp {

// Model parameters with theta = pi / divisor, i.e. Delta_c = 2 lambda cot(pi / divisor).
model::ModelParams params_for_theta(const cfg::ModelConfig& m, double divisor);

// Cat-regime parameters: g chosen so that min|Delta_+-| / max(g(theta), G(theta))
// equals cat.detuning_ratio, G = G_over_g * g.
model::ModelParams cat_params(const cfg::RunConfig& c);

// Period 2 pi / min(|Omega_A|, |Omega_B|).
double slow_period(const model::DressedParams& dp);

// Columns: g_t, y_pi_<k>..., y_fock_pi_<k>...
ResultTable run_fig5(const cfg::RunConfig& c);
// Columns: t, fidelity, fidelity_full, fidelity_effective, y, pop_b, pop_c, pop_e,
// abs_alpha_plus, abs_alpha_minus
ResultTable run_cat(const cfg::RunConfig& c);
// Columns: t, N_analytic, N_exact, r_derivative, r_paper
ResultTable run_coherent(const cfg::RunConfig& c);
// Columns: f, abs_t_bc, abs_t_ce, abs_t_eb, abs_product
ResultTable run_selection_rules(const cfg::RunConfig& c);
// Columns: instance, dim, ratio, residual, energy_error, error_bound, energy_error_half
ResultTable run_fnt_check(const cfg::RunConfig& c);
// Columns: f, E_b, E_c, E_e
ResultTable run_spectrum(const cfg::RunConfig& c);

ResultTable run_experiment(const cfg::RunConfig& c);

}  // namespace delta_atom::exp
