// hamiltonians.hpp - lab, rotating and dressed-frame Hamiltonians of the
// cyclic three-level atom coupled to one quantized mode, and the analytic
// effective Hamiltonians after eliminating |e>.
//
// Bare operators use the atom-major (b, c, e) basis of numkernel. Dressed
// operators use slot order (-, +, e) with the same atom-major layout; the
// map back to bare coordinates is H_bare = R H_dressed R^dag.

#pragma once

#include <string>

#include "delta_atom/numkernel.hpp"

namespace delta_atom::model {

using num::HilbertSpace;
using num::Operator;

inline constexpr int slot_minus = 0;
inline constexpr int slot_plus = 1;
inline constexpr int slot_e = 2;

struct ModelParams {
  double omega_e = 0.0;
  double omega_c = 0.0;
  double omega = 0.0;    // quantized mode
  double Omega_e = 0.0;  // classical drives
  double Omega_c = 0.0;
  double g = 0.0;
  double G = 0.0;
  double lambda = 0.0;

  double Delta_e() const { return omega_e - Omega_e; }
  double Delta_c() const { return omega_c - Omega_c; }

  // Throws ValidationError if the frequencies violate Omega_e - Omega_c = omega
  // or the parameters are not finite.
  void validate() const;

  static ModelParams from_lab(double omega_e, double omega_c, double omega, double Omega_e,
                              double Omega_c, double g, double G, double lambda);
  // Chooses drive and mode frequencies satisfying the matching condition.
  static ModelParams from_detunings(double Delta_e, double Delta_c, double g, double G,
                                    double lambda, double omega = 10.0, double Omega_c = 20.0);
};

struct DressedParams {
  double Delta_e = 0.0;
  double Delta_c = 0.0;
  double g = 0.0;
  double G = 0.0;
  double lambda = 0.0;

  double theta = 0.0;
  double cos_half = 0.0;
  double sin_half = 0.0;
  double omega_prime = 0.0;
  double eps_plus = 0.0;
  double eps_minus = 0.0;
  double g_theta = 0.0;  // g cos(theta/2)
  double G_theta = 0.0;  // g sin(theta/2)
  double xi = 0.0;       // (G/g) tan(theta/2)
  double zeta = 0.0;     // (G/g) cot(theta/2)
  double Delta_plus = 0.0;
  double Delta_minus = 0.0;
  double Omega_A = 0.0;
  double Omega_B = 0.0;
  double Gamma_cross = 0.0;
  double driving_force = 0.0;          // Omega_B * zeta
  double driving_force_printed = 0.0;  // g(theta) G(theta) / Delta_-

  // xi or zeta diverges (lambda -> 0, or g = 0 with G != 0). Operators stay
  // finite because they only use the products below.
  bool singular = false;
  std::string warning;

  // Finite products that remain well defined when xi or zeta diverge.
  double gA_shift() const { return G * sin_half; }     // g(theta) xi
  double GB_shift() const { return G * cos_half; }     // G(theta) zeta
  double OmegaA_xi() const { return g * G * sin_half * cos_half / Delta_plus; }
  double OmegaA_xi2() const { return G * G * sin_half * sin_half / Delta_plus; }
  double OmegaB_zeta() const { return g * G * sin_half * cos_half / Delta_minus; }
  double OmegaB_zeta2() const { return G * G * cos_half * cos_half / Delta_minus; }
  double Gamma_xi() const;
  double Gamma_zeta() const;
  double Gamma_xi_zeta() const;
};

Operator lab_hamiltonian(const ModelParams& p, const HilbertSpace& space, double t);

// K = Omega_e |e><e| + Omega_c |c><c| + omega a^dag a, and W(t) = exp(-i K t).
Operator frame_generator(const ModelParams& p, const HilbertSpace& space);
Operator frame_unitary(const ModelParams& p, const HilbertSpace& space, double t);

// Throws ValidationError if the matching condition is violated.
Operator rotating_hamiltonian(const ModelParams& p, const HilbertSpace& space);

// Throws ValidationError if theta is undefined (Delta_c = lambda = 0) and
// ResonanceError if Delta_+ or Delta_- vanishes.
DressedParams dressed_params(const ModelParams& p);

// Delta_c |c><c| + lambda (|c><b| + |b><c|) on the (b, c) pair, 2 x 2.
Operator bc_subsystem(const ModelParams& p);

// 3N x 3N unitary with the dressed states as columns (bare rows, dressed slots).
Operator dressed_rotation(const DressedParams& dp, const HilbertSpace& space);

struct DressedHamiltonian {
  Operator H0;
  Operator H1;
};

// In dressed coordinates.
DressedHamiltonian dressed_hamiltonian(const ModelParams& p, const HilbertSpace& space);

// Displaced operators A = a + xi, B = a - zeta on the Fock space (requires
// finite xi, zeta).
Operator displaced_A(const DressedParams& dp, int fock_dim);
Operator displaced_B(const DressedParams& dp, int fock_dim);

struct EffectiveHamiltonians {
  Operator H_e;       // |e> block, dressed coordinates (3N x 3N)
  Operator H_bc;      // |+>,|-> blocks with the cross term
  Operator H_bc_rwa;  // cross term dropped
  Operator H_minus;   // field-only N x N: -Omega_B a^dag a + f (a + a^dag)
};

EffectiveHamiltonians effective_hamiltonians(const ModelParams& p, const HilbertSpace& space);

}  // namespace delta_atom::model
