#include "delta_atom/fnt.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace delta_atom::fnt {

using num::cplx;

Operator Decomposition::to_original(const Operator& m) const {
  return Operator(basis * m.matrix() * basis.adjoint());
}

Decomposition split(const Operator& h, const Matrix& basis) {
  if (basis.rows() != h.dim() || basis.cols() != h.dim()) {
    throw DimensionError("split: basis dimension does not match H");
  }
  const double defect =
      (basis.adjoint() * basis - Matrix::Identity(h.dim(), h.dim())).cwiseAbs().maxCoeff();
  if (defect > 1e-10) {
    std::ostringstream os;
    os << "split: basis is not unitary (max|U^dag U - 1| = " << defect << ")";
    throw ValidationError(os.str());
  }
  Matrix hb = basis.adjoint() * h.matrix() * basis;
  Decomposition d;
  d.basis = basis;
  d.energies = hb.diagonal().real();
  Matrix h0 = Matrix::Zero(h.dim(), h.dim());
  h0.diagonal() = d.energies.cast<cplx>();
  hb.diagonal().setZero();
  d.H0 = Operator(std::move(h0));
  d.H1 = Operator(std::move(hb));
  return d;
}

Decomposition split(const Operator& h) { return split(h, Matrix::Identity(h.dim(), h.dim())); }

namespace {

struct Couplings {
  double gap_tol;
  double coupling_tol;
};

Couplings tolerances(const Decomposition& d, const GeneratorOptions& o) {
  const double e_scale = d.energies.size() ? d.energies.cwiseAbs().maxCoeff() : 0.0;
  return {o.gap_rel * e_scale, o.coupling_rel * d.H1.max_abs()};
}

}  // namespace

Operator generator(const Decomposition& d, const GeneratorOptions& options) {
  const Eigen::Index n = d.H1.dim();
  const Couplings tol = tolerances(d, options);
  Matrix s = Matrix::Zero(n, n);
  for (Eigen::Index m = 0; m < n; ++m) {
    for (Eigen::Index k = 0; k < n; ++k) {
      if (m == k) continue;
      const cplx h = d.H1(m, k);
      if (std::abs(h) <= tol.coupling_tol) continue;
      const double gap = d.energies(k) - d.energies(m);
      if (std::abs(gap) <= tol.gap_tol) {
        std::ostringstream os;
        os << "generator: levels " << m << " and " << k << " are degenerate (E = " << d.energies(m)
           << ") but coupled by |H1| = " << std::abs(h);
        throw DegeneracyError(os.str(), m, k);
      }
      s(m, k) = h / gap;
    }
  }
  return Operator(std::move(s));
}

double generator_residual(const Decomposition& d, const Operator& s) {
  return num::operator_norm(d.H1 + num::commutator(d.H0, s));
}

Operator effective_hamiltonian(const Decomposition& d, const Operator& s) {
  return d.H0 + cplx(0.5) * num::commutator(d.H1, s);
}

Series perturbation_series(const Decomposition& d, const Operator& s,
                           const GeneratorOptions& options) {
  const Eigen::Index n = d.H1.dim();
  const Couplings tol = tolerances(d, options);
  Series out;
  out.energies_2nd = d.energies;
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = 0; l < n; ++l) {
      if (l == k) continue;
      const cplx h = d.H1(l, k);
      if (std::abs(h) <= tol.coupling_tol) continue;
      out.energies_2nd(k) += std::norm(h) / (d.energies(k) - d.energies(l));
    }
  }
  const Matrix id = Matrix::Identity(n, n);
  out.states_1st = id + s.matrix();
  out.states_2nd = id + s.matrix() + 0.5 * s.matrix() * s.matrix();
  return out;
}

FNTResult run(const Decomposition& d, const GeneratorOptions& options) {
  FNTResult r;
  r.S = generator(d, options);
  r.H_eff = effective_hamiltonian(d, r.S);
  r.series = perturbation_series(d, r.S, options);
  r.residual = generator_residual(d, r.S);
  return r;
}

RandomInstance random_instance(std::mt19937_64& rng, int dim, double ratio) {
  if (dim < 2) throw DimensionError("random_instance: dim must be >= 2");
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> normal;
  RealVector e(dim);
  double acc = 0.0;
  double min_gap = 0.0;
  for (int i = 0; i < dim; ++i) {
    const double step = 1.0 + unif(rng);
    acc += step;
    e(i) = acc;
    if (i > 0) min_gap = (i == 1) ? step : std::min(min_gap, step);
  }
  Matrix x(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) x(i, j) = cplx(normal(rng), normal(rng));
  }
  Matrix v = 0.5 * (x + x.adjoint());
  v.diagonal().setZero();
  v *= ratio * min_gap / num::operator_norm(v);

  RandomInstance out;
  out.ratio = ratio;
  out.min_gap = min_gap;
  out.d.basis = Matrix::Identity(dim, dim);
  out.d.energies = e;
  Matrix h0 = Matrix::Zero(dim, dim);
  h0.diagonal() = e.cast<cplx>();
  out.d.H0 = Operator(std::move(h0));
  out.d.H1 = Operator(std::move(v));
  return out;
}

Decomposition scaled(const Decomposition& d, double factor) {
  Decomposition out = d;
  out.H1 = cplx(factor) * d.H1;
  return out;
}

Decomposition model_decomposition(const model::ModelParams& p, const num::HilbertSpace& space) {
  const model::DressedParams dp = model::dressed_params(p);
  return split(model::rotating_hamiltonian(p, space), model::dressed_rotation(dp, space).matrix());
}

std::array<double, 4> model_generator_coefficients(const model::DressedParams& dp) {
  return {-dp.g_theta / dp.Delta_plus, dp.G_theta / dp.Delta_minus, dp.g_theta / dp.Delta_plus,
          -dp.G_theta / dp.Delta_minus};
}

std::array<double, 4> printed_generator_coefficients(const model::DressedParams& dp) {
  const double eps = 0.5 * (dp.Delta_c + dp.Delta_e);
  const double delta = 0.5 * std::sqrt((dp.Delta_c - dp.Delta_e) * (dp.Delta_c - dp.Delta_e) +
                                       4.0 * dp.lambda * dp.lambda);
  return {-dp.g_theta / (eps + delta), -dp.G_theta / (eps - delta), dp.g_theta / (eps + delta),
          dp.G_theta / (eps - delta)};
}

Operator model_generator(const model::DressedParams& dp, const num::HilbertSpace& space,
                         const std::array<double, 4>& c) {
  const int n = space.fock_dim();
  const Matrix a = num::boson_annihilation(n).matrix();
  const Matrix id = Matrix::Identity(n, n);
  // G1 A = G1/g(theta) * g(theta) A, with g(theta) A finite; likewise for B.
  auto ratio = [](double coeff, double amp) { return amp == 0.0 ? 0.0 : coeff / amp; };
  const Matrix gA = dp.g_theta * a + dp.gA_shift() * id;
  const Matrix GB = dp.G_theta * a - dp.GB_shift() * id;
  auto place = [&space](int i, int j, const Matrix& f) {
    return num::embed(num::atom_projector(num::Level{i}, num::Level{j}), Operator(f), space);
  };
  using model::slot_e;
  using model::slot_minus;
  using model::slot_plus;
  return place(slot_e, slot_plus, ratio(c[0], dp.g_theta) * gA) +
         place(slot_e, slot_minus, ratio(c[1], dp.G_theta) * GB) +
         place(slot_plus, slot_e, ratio(c[2], dp.g_theta) * gA.adjoint()) +
         place(slot_minus, slot_e, ratio(c[3], dp.G_theta) * GB.adjoint());
}

}  // namespace delta_atom::fnt
