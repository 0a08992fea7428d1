#include "delta_atom/grid_kernels.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "delta_atom/errors.hpp"

namespace delta_atom::kernels {

std::vector<double> second_derivative_weights(int order) {
  switch (order) {
    case 2:
      return {-2.0, 1.0};
    case 4:
      return {-5.0 / 2.0, 4.0 / 3.0, -1.0 / 12.0};
    default:
      throw ValidationError("stencil order must be 2 or 4, got " + std::to_string(order));
  }
}

GridHamiltonian::GridHamiltonian(int n_p, int n_m, double h_p, double h_m, double mass_p,
                                 double mass_m, std::vector<double> potential, int stencil_order)
    : n_p_(n_p),
      n_m_(n_m),
      order_(stencil_order),
      weights_(second_derivative_weights(stencil_order)),
      scale_p_(-1.0 / (2.0 * mass_p * h_p * h_p)),
      scale_m_(-1.0 / (2.0 * mass_m * h_m * h_m)),
      potential_(std::move(potential)) {
  const int reach = static_cast<int>(weights_.size()) - 1;
  if (n_p_ <= 2 * reach || n_m_ <= 2 * reach) {
    throw DimensionError("GridHamiltonian: grid too small for the stencil");
  }
  if (static_cast<long>(potential_.size()) != size()) {
    throw DimensionError("GridHamiltonian: potential has wrong size");
  }
}

double GridHamiltonian::row(std::span<const double> x, int ip, int im) const {
  const long base = static_cast<long>(ip) * n_m_;
  const double centre = x[base + im];
  double lap_p = weights_[0] * centre;
  double lap_m = weights_[0] * centre;
  for (std::size_t k = 1; k < weights_.size(); ++k) {
    const int o = static_cast<int>(k);
    const int pp = (ip + o) % n_p_;
    const int pm = (ip - o + n_p_) % n_p_;
    const int mp = (im + o) % n_m_;
    const int mm = (im - o + n_m_) % n_m_;
    lap_p += weights_[k] * (x[static_cast<long>(pp) * n_m_ + im] +
                            x[static_cast<long>(pm) * n_m_ + im]);
    lap_m += weights_[k] * (x[base + mp] + x[base + mm]);
  }
  return scale_p_ * lap_p + scale_m_ * lap_m + potential_[base + im] * centre;
}

void GridHamiltonian::apply(std::span<const double> x, std::span<double> y) const {
  if (static_cast<long>(x.size()) != size() || static_cast<long>(y.size()) != size()) {
    throw DimensionError("GridHamiltonian::apply: vector size mismatch");
  }
#pragma omp parallel for schedule(static)
  for (int ip = 0; ip < n_p_; ++ip) {
    for (int im = 0; im < n_m_; ++im) {
      y[static_cast<long>(ip) * n_m_ + im] = row(x, ip, im);
    }
  }
}

void GridHamiltonian::apply_serial(std::span<const double> x, std::span<double> y) const {
  if (static_cast<long>(x.size()) != size() || static_cast<long>(y.size()) != size()) {
    throw DimensionError("GridHamiltonian::apply_serial: vector size mismatch");
  }
  // Axis-by-axis passes: potential, then phi_p derivative, then phi_m derivative.
  for (long i = 0; i < size(); ++i) y[i] = potential_[i] * x[i];
  const int reach = static_cast<int>(weights_.size()) - 1;
  for (int ip = 0; ip < n_p_; ++ip) {
    for (int im = 0; im < n_m_; ++im) {
      double acc = 0.0;
      for (int o = -reach; o <= reach; ++o) {
        const int q = ((ip + o) % n_p_ + n_p_) % n_p_;
        acc += weights_[static_cast<std::size_t>(std::abs(o))] * x[static_cast<long>(q) * n_m_ + im];
      }
      y[static_cast<long>(ip) * n_m_ + im] += scale_p_ * acc;
    }
  }
  for (int ip = 0; ip < n_p_; ++ip) {
    for (int im = 0; im < n_m_; ++im) {
      double acc = 0.0;
      for (int o = -reach; o <= reach; ++o) {
        const int q = ((im + o) % n_m_ + n_m_) % n_m_;
        acc += weights_[static_cast<std::size_t>(std::abs(o))] * x[static_cast<long>(ip) * n_m_ + q];
      }
      y[static_cast<long>(ip) * n_m_ + im] += scale_m_ * acc;
    }
  }
}

double GridHamiltonian::spectral_bound() const {
  double off = 0.0;
  for (std::size_t k = 1; k < weights_.size(); ++k) off += 2.0 * std::abs(weights_[k]);
  const double kin = (std::abs(scale_p_) + std::abs(scale_m_)) * (std::abs(weights_[0]) + off);
  double vmax = 0.0;
  for (double v : potential_) vmax = std::max(vmax, std::abs(v));
  return kin + vmax;
}

}  // namespace delta_atom::kernels
