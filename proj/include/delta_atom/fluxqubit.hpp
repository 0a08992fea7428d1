// fluxqubit.hpp - three-junction flux-qubit loop: potential, grid spectrum
// and flux-coupling matrix elements among the lowest levels.
//
// Units: energies in E_J, hbar = 1. Masses are set through the dimensionless
// ratio r: M_p = r / E_J, M_m = M_p (1 + 2 alpha).

#pragma once

#include <Eigen/Dense>

#include <complex>

#include "delta_atom/lanczos.hpp"

namespace delta_atom::flux {

struct FluxParams {
  double E_J = 1.0;
  double alpha = 0.8;
  double f = 0.5;
  double mass_ratio = 3.0;

  double M_p() const { return mass_ratio / E_J; }
  double M_m() const { return M_p() * (1.0 + 2.0 * alpha); }

  // Throws ValidationError unless E_J > 0, 0 < alpha < 2, mass_ratio > 0.
  void validate() const;
};

// Periodic grid on [-pi, pi) x [-pi, pi).
struct Grid2D {
  int n_p = 64;
  int n_m = 64;
  int stencil_order = 4;  // 2 or 4

  double h_p() const;
  double h_m() const;
  double phi_p(int i) const;
  double phi_m(int i) const;

  // Throws ValidationError unless n_p, n_m >= 16 and even.
  void validate() const;
};

double potential_energy(double phi_p, double phi_m, const FluxParams& params);

// dU/df = 2 pi alpha E_J sin(2 pi f + 2 phi_m)
double coupling_operator(double phi_p, double phi_m, const FluxParams& params);

struct LevelData {
  Eigen::VectorXd energies;       // ascending
  Eigen::MatrixXd wavefunctions;  // columns, p-major grid vectors with unit l2 norm
  bool degenerate = false;        // some adjacent gap below 1e-8 * scale
  Grid2D grid;
  lanczos::Result solver;
};

struct SpectrumOptions {
  // Restrict to states even under the (pi, pi) translation. The 2pi x 2pi
  // torus covers the physical configuration space twice; odd states are not
  // single-valued in the original junction phases.
  bool translation_even = true;
  lanczos::Options solver;
};

// Lowest k eigenpairs of P_p^2/2M_p + P_m^2/2M_m + U on the grid.
LevelData spectrum_2d(const FluxParams& params, const Grid2D& grid, int k,
                      const SpectrumOptions& options = {});

// t_ij = <i| dU/df |j> over the three lowest levels (b, c, e).
Eigen::Matrix3cd transition_elements(const LevelData& levels, const FluxParams& params);

// <psi| P |psi> for the inversion (phi_p, phi_m) -> (-phi_p, -phi_m).
double parity_expectation(const Eigen::VectorXd& psi, const Grid2D& grid);

}  // namespace delta_atom::flux
