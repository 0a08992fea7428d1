// dynamics.hpp - exact and effective time evolution, the analytic cat state,
// the coherent-state overlap exponent, photon number and generation rate.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "delta_atom/hamiltonians.hpp"
#include "delta_atom/numkernel.hpp"

namespace delta_atom::dyn {

using num::cplx;
using num::HilbertSpace;
using num::QuantumState;

// Branch data of the state grown from |b>|0> under the effective |+-> Hamiltonian:
//   weight_+ phase_+ |alpha_+>|+> + weight_- phase_- |alpha_->|->
struct CatState {
  double weight_plus = 0.0;   // sin(theta/2)
  double weight_minus = 0.0;  // cos(theta/2)
  cplx alpha_plus;            // alpha(-xi, t) with Omega_A
  cplx alpha_minus;           // alpha(zeta, t) with Omega_B
  // exp(-i eps t + i x^2 sin(Omega_x t)), unimodular
  cplx phase_plus;
  cplx phase_minus;
  // alternative form exp(i x^2 exp(-i Omega_x t)); not unimodular in general
  cplx phase_plus_printed;
  cplx phase_minus_printed;
};

// alpha(x, t) = x (1 - exp(i Omega t))
cplx coherent_amplitude(double x, double omega, double t);

// Requires finite xi and zeta.
CatState cat_evolution(const model::DressedParams& dp, double t);

// Cat state in dressed coordinates (slot order -, +, e).
QuantumState cat_state_vector(const model::DressedParams& dp, const HilbertSpace& space, double t,
                              bool printed_phases = false);

// Closed-form exponent 2(zeta+xi)^2 - 4 zeta xi sin^2[(Omega_B - Omega_A)t/2]
//   - 2 zeta (zeta+xi) cos(Omega_B t) - 2 xi (zeta+xi) cos(Omega_A t),
// which equals |alpha(zeta,t) - alpha(-xi,t)|^2.
double overlap_y(const model::DressedParams& dp, double t);

// |<alpha(zeta,t)|alpha(-xi,t)>| = exp(-y/2).
double overlap_F(const model::DressedParams& dp, double t);

// -2 ln |<alpha(zeta,t)|alpha(-xi,t)>| from truncated Fock vectors.
double overlap_y_fock(const model::DressedParams& dp, double t, int fock_dim);

// <a^dag a> for |-> |0> evolved under H_minus: 4 zeta^2 sin^2(Omega_B t / 2).
double photon_number(const model::DressedParams& dp, double t);

struct Rate {
  double derivative = 0.0;  // |dN/dt| = 2 zeta^2 |Omega_B sin(Omega_B t)|
  double printed = 0.0;     // 2 g(theta)^2 / Delta_- |sin(Omega_B t)|
};

Rate generation_rate(const model::DressedParams& dp, double t);

struct Trajectory {
  std::vector<double> times;
  std::vector<QuantumState> states;  // exact, bare coordinates (empty unless requested)
  std::map<std::string, std::vector<double>> observables;
};

struct CompareOptions {
  bool keep_states = false;
  // Also compare against the analytic cat state; psi0 must be |b>|0>.
  bool analytic_cat = false;
};

// Propagates psi0 (bare coordinates) under the rotating Hamiltonian and under
// R (H_bc_rwa + H_e) R^dag. Observables: norm, energy, pop_b, pop_c, pop_e,
// photon_number, fidelity, branch_fidelity, y, and with analytic_cat also
// cat_fidelity, cat_fidelity_full. Throws TruncationError if <a^dag a>
// exceeds fock_dim / 4.
Trajectory evolve_and_compare(const model::ModelParams& params, const HilbertSpace& space,
                              const QuantumState& psi0, const std::vector<double>& times,
                              const CompareOptions& options = {});

// Uniform grid of n samples on [0, t_end].
std::vector<double> uniform_times(double t_end, int n);

}  // namespace delta_atom::dyn
