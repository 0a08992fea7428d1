#include "delta_atom/fluxqubit.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "delta_atom/errors.hpp"
#include "delta_atom/grid_kernels.hpp"

namespace delta_atom::flux {

using std::numbers::pi;

void FluxParams::validate() const {
  if (!(E_J > 0.0)) throw ValidationError("flux: E_J must be > 0");
  if (!(alpha > 0.0 && alpha < 2.0)) throw ValidationError("flux: alpha must lie in (0, 2)");
  if (!(mass_ratio > 0.0)) throw ValidationError("flux: mass_ratio must be > 0");
  if (!std::isfinite(f)) throw ValidationError("flux: f must be finite");
}

double Grid2D::h_p() const { return 2.0 * pi / n_p; }
double Grid2D::h_m() const { return 2.0 * pi / n_m; }
double Grid2D::phi_p(int i) const { return -pi + h_p() * i; }
double Grid2D::phi_m(int i) const { return -pi + h_m() * i; }

void Grid2D::validate() const {
  if (n_p < 16 || n_m < 16) throw ValidationError("grid: n_p and n_m must be >= 16");
  if (n_p % 2 != 0 || n_m % 2 != 0) throw ValidationError("grid: n_p and n_m must be even");
  if (stencil_order != 2 && stencil_order != 4) {
    throw ValidationError("grid: stencil_order must be 2 or 4");
  }
}

double potential_energy(double phi_p, double phi_m, const FluxParams& p) {
  return 2.0 * p.E_J * (1.0 - std::cos(phi_p) * std::cos(phi_m)) +
         p.alpha * p.E_J * (1.0 - std::cos(2.0 * pi * p.f + 2.0 * phi_m));
}

double coupling_operator(double /*phi_p*/, double phi_m, const FluxParams& p) {
  return 2.0 * pi * p.alpha * p.E_J * std::sin(2.0 * pi * p.f + 2.0 * phi_m);
}

namespace {

void translate_half(const Eigen::VectorXd& x, Eigen::VectorXd& out, const Grid2D& g) {
  const int hp = g.n_p / 2;
  const int hm = g.n_m / 2;
  for (int ip = 0; ip < g.n_p; ++ip) {
    const int jp = (ip + hp) % g.n_p;
    for (int im = 0; im < g.n_m; ++im) {
      out(ip * g.n_m + im) = x(jp * g.n_m + (im + hm) % g.n_m);
    }
  }
}

}  // namespace

LevelData spectrum_2d(const FluxParams& params, const Grid2D& grid, int k,
                      const SpectrumOptions& options) {
  params.validate();
  grid.validate();
  if (k < 3) throw ValidationError("spectrum_2d: k must be >= 3, got " + std::to_string(k));

  std::vector<double> u(static_cast<std::size_t>(grid.n_p) * grid.n_m);
  for (int ip = 0; ip < grid.n_p; ++ip) {
    for (int im = 0; im < grid.n_m; ++im) {
      u[static_cast<std::size_t>(ip) * grid.n_m + im] =
          potential_energy(grid.phi_p(ip), grid.phi_m(im), params);
    }
  }
  const kernels::GridHamiltonian h(grid.n_p, grid.n_m, grid.h_p(), grid.h_m(), params.M_p(),
                                   params.M_m(), std::move(u), grid.stencil_order);
  const Eigen::Index n = h.size();

  lanczos::ApplyFn apply = [&h](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    y.resize(x.size());
    h.apply({x.data(), static_cast<std::size_t>(x.size())},
            {y.data(), static_cast<std::size_t>(y.size())});
  };
  lanczos::ProjectFn project;
  if (options.translation_even) {
    project = [&grid](Eigen::VectorXd& v) {
      Eigen::VectorXd t(v.size());
      translate_half(v, t, grid);
      v = 0.5 * (v + t);
    };
  }

  LevelData out;
  out.grid = grid;
  out.solver = lanczos::lowest_eigenpairs(apply, n, k, options.solver, project);
  out.energies = out.solver.values;
  out.wavefunctions = out.solver.vectors;

  for (int c = 0; c < k; ++c) {
    auto col = out.wavefunctions.col(c);
    col.normalize();
    Eigen::Index imax = 0;
    col.cwiseAbs().maxCoeff(&imax);
    if (col(imax) < 0.0) col = -col;
  }
  const double scale = std::max(1.0, out.energies.cwiseAbs().maxCoeff());
  for (int c = 0; c + 1 < k; ++c) {
    if (out.energies(c + 1) - out.energies(c) < 1e-8 * scale) out.degenerate = true;
  }
  return out;
}

Eigen::Matrix3cd transition_elements(const LevelData& levels, const FluxParams& params) {
  const Grid2D& g = levels.grid;
  if (levels.wavefunctions.cols() < 3 ||
      levels.wavefunctions.rows() != static_cast<Eigen::Index>(g.n_p) * g.n_m) {
    throw DimensionError("transition_elements: need three grid wavefunctions");
  }
  Eigen::VectorXd op(levels.wavefunctions.rows());
  for (int ip = 0; ip < g.n_p; ++ip) {
    for (int im = 0; im < g.n_m; ++im) {
      op(ip * g.n_m + im) = coupling_operator(g.phi_p(ip), g.phi_m(im), params);
    }
  }
  const Eigen::MatrixXd psi = levels.wavefunctions.leftCols(3);
  const Eigen::Matrix3d t = psi.transpose() * op.asDiagonal() * psi;
  return (0.5 * (t + t.transpose())).cast<std::complex<double>>();
}

double parity_expectation(const Eigen::VectorXd& psi, const Grid2D& g) {
  if (psi.size() != static_cast<Eigen::Index>(g.n_p) * g.n_m) {
    throw DimensionError("parity_expectation: vector size does not match grid");
  }
  // phi = -pi + h i maps to -phi at index (n - i) mod n.
  double acc = 0.0;
  for (int ip = 0; ip < g.n_p; ++ip) {
    const int jp = (g.n_p - ip) % g.n_p;
    for (int im = 0; im < g.n_m; ++im) {
      const int jm = (g.n_m - im) % g.n_m;
      acc += psi(ip * g.n_m + im) * psi(jp * g.n_m + jm);
    }
  }
  return acc / psi.squaredNorm();
}

}  // namespace delta_atom::flux
