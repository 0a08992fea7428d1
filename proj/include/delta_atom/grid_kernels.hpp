// grid_kernels.hpp - matrix-free periodic 2D Hamiltonian on a uniform grid.
//
// H = -(1/2M_p) d^2/dphi_p^2 - (1/2M_m) d^2/dphi_m^2 + U(phi_p, phi_m), with
// central finite differences of order 2 or 4 and periodic wrap in both axes.
// apply() is the fused OpenMP kernel; apply_serial() is an axis-by-axis serial
// reference kept for testing and benchmarking (agrees to rounding).

#pragma once

#include <span>
#include <vector>

namespace delta_atom::kernels {

class GridHamiltonian {
 public:
  // Storage is p-major: index = i_p * n_m + i_m.
  GridHamiltonian(int n_p, int n_m, double h_p, double h_m, double mass_p, double mass_m,
                  std::vector<double> potential, int stencil_order);

  int n_p() const noexcept { return n_p_; }
  int n_m() const noexcept { return n_m_; }
  long size() const noexcept { return static_cast<long>(n_p_) * n_m_; }
  int stencil_order() const noexcept { return order_; }
  std::span<const double> potential() const noexcept { return potential_; }

  // y = H x
  void apply(std::span<const double> x, std::span<double> y) const;
  void apply_serial(std::span<const double> x, std::span<double> y) const;

  // Upper bound on the spectrum (Gershgorin), used for solver scaling.
  double spectral_bound() const;

 private:
  double row(std::span<const double> x, int ip, int im) const;

  int n_p_;
  int n_m_;
  int order_;
  std::vector<double> weights_;  // weights_[k] multiplies offsets +-k, k = 0..order/2
  double scale_p_;               // -1 / (2 M_p h_p^2)
  double scale_m_;
  std::vector<double> potential_;
};

// Central second-derivative stencil weights for offsets 0..order/2 (unit spacing).
std::vector<double> second_derivative_weights(int order);

}  // namespace delta_atom::kernels
