#include "delta_atom/hamiltonians.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace delta_atom::model {

using num::cplx;
using num::I;
using num::Level;
using num::Matrix;

void ModelParams::validate() const {
  for (double v : {omega_e, omega_c, omega, Omega_e, Omega_c, g, G, lambda}) {
    if (!std::isfinite(v)) throw ValidationError("model: parameters must be finite");
  }
  const double scale = std::max({1.0, std::abs(Omega_e), std::abs(Omega_c), std::abs(omega)});
  const double mismatch = Omega_e - Omega_c - omega;
  if (std::abs(mismatch) > 1e-12 * scale) {
    std::ostringstream os;
    os << "model: matching condition Omega_e - Omega_c = omega violated by " << mismatch
       << "; the rotating frame would stay time-dependent";
    throw ValidationError(os.str());
  }
}

ModelParams ModelParams::from_lab(double omega_e, double omega_c, double omega, double Omega_e,
                                  double Omega_c, double g, double G, double lambda) {
  ModelParams p{omega_e, omega_c, omega, Omega_e, Omega_c, g, G, lambda};
  p.validate();
  return p;
}

ModelParams ModelParams::from_detunings(double Delta_e, double Delta_c, double g, double G,
                                        double lambda, double omega, double Omega_c) {
  ModelParams p;
  p.omega = omega;
  p.Omega_c = Omega_c;
  p.Omega_e = Omega_c + omega;
  p.omega_c = Omega_c + Delta_c;
  p.omega_e = p.Omega_e + Delta_e;
  p.g = g;
  p.G = G;
  p.lambda = lambda;
  p.validate();
  return p;
}

namespace {

Operator atom(int i, int j) { return num::atom_projector(Level{i}, Level{j}); }

Operator place(int i, int j, const Matrix& field, const HilbertSpace& space) {
  return num::embed(atom(i, j), Operator(field), space);
}

Matrix annihilation(int n) { return num::boson_annihilation(n).matrix(); }

// Finite quotient num/den; 0/0 is taken as 0 and x/0 as +-infinity.
double quotient(double num, double den) {
  if (den == 0.0) {
    if (num == 0.0) return 0.0;
    return std::copysign(std::numeric_limits<double>::infinity(), num);
  }
  return num / den;
}

}  // namespace

double DressedParams::Gamma_xi() const {
  return g * G * sin_half * sin_half * (2.0 * Delta_e - Delta_c) / (2.0 * Delta_plus * Delta_minus);
}

double DressedParams::Gamma_zeta() const {
  return g * G * cos_half * cos_half * (2.0 * Delta_e - Delta_c) / (2.0 * Delta_plus * Delta_minus);
}

double DressedParams::Gamma_xi_zeta() const {
  return G * G * sin_half * cos_half * (2.0 * Delta_e - Delta_c) / (2.0 * Delta_plus * Delta_minus);
}

Operator lab_hamiltonian(const ModelParams& p, const HilbertSpace& space, double t) {
  const int n = space.fock_dim();
  const Matrix a = annihilation(n);
  const Matrix id = Matrix::Identity(n, n);
  const Matrix num_op = a.adjoint() * a;
  Operator h = place(2, 2, p.omega_e * id + p.omega * num_op, space) +
               place(1, 1, p.omega_c * id + p.omega * num_op, space) +
               place(0, 0, p.omega * num_op, space);
  Operator v = place(2, 1, p.g * a, space) +
               place(0, 2, p.G * std::exp(I * (p.Omega_e * t)) * id, space) +
               place(0, 1, p.lambda * std::exp(I * (p.Omega_c * t)) * id, space);
  return h + v + v.adjoint();
}

Operator frame_generator(const ModelParams& p, const HilbertSpace& space) {
  const int n = space.fock_dim();
  const Matrix a = annihilation(n);
  const Matrix id = Matrix::Identity(n, n);
  const Matrix num_op = a.adjoint() * a;
  return place(2, 2, p.Omega_e * id + p.omega * num_op, space) +
         place(1, 1, p.Omega_c * id + p.omega * num_op, space) + place(0, 0, p.omega * num_op, space);
}

Operator frame_unitary(const ModelParams& p, const HilbertSpace& space, double t) {
  // K is diagonal in the joint basis.
  const Matrix k = frame_generator(p, space).matrix();
  Matrix w = Matrix::Zero(k.rows(), k.cols());
  for (Eigen::Index i = 0; i < k.rows(); ++i) w(i, i) = std::exp(-I * (k(i, i).real() * t));
  return Operator(std::move(w));
}

Operator rotating_hamiltonian(const ModelParams& p, const HilbertSpace& space) {
  p.validate();
  const int n = space.fock_dim();
  const Matrix a = annihilation(n);
  const Matrix id = Matrix::Identity(n, n);
  Operator h = place(1, 1, p.Delta_c() * id, space) + place(2, 2, p.Delta_e() * id, space);
  Operator v = place(2, 1, p.g * a, space) + place(2, 0, p.G * id, space) +
               place(0, 1, p.lambda * id, space);
  return h + v + v.adjoint();
}

DressedParams dressed_params(const ModelParams& p) {
  p.validate();
  DressedParams d;
  d.Delta_e = p.Delta_e();
  d.Delta_c = p.Delta_c();
  d.g = p.g;
  d.G = p.G;
  d.lambda = p.lambda;
  if (d.Delta_c == 0.0 && d.lambda == 0.0) {
    throw ValidationError("dressed_params: mixing angle undefined for Delta_c = lambda = 0");
  }
  d.theta = std::atan2(2.0 * d.lambda, d.Delta_c);
  d.cos_half = std::cos(0.5 * d.theta);
  d.sin_half = std::sin(0.5 * d.theta);
  d.omega_prime = std::sqrt(d.lambda * d.lambda + 0.25 * d.Delta_c * d.Delta_c);
  d.eps_plus = 0.5 * d.Delta_c + d.omega_prime;
  d.eps_minus = 0.5 * d.Delta_c - d.omega_prime;
  d.g_theta = d.g * d.cos_half;
  d.G_theta = d.g * d.sin_half;
  d.xi = quotient(d.G * d.sin_half, d.g * d.cos_half);
  d.zeta = quotient(d.G * d.cos_half, d.g * d.sin_half);
  d.Delta_plus = d.Delta_e - d.eps_plus;
  d.Delta_minus = d.Delta_e - d.eps_minus;

  const double scale = std::max({1.0, std::abs(d.Delta_e), std::abs(d.eps_plus), std::abs(d.eps_minus)});
  if (std::abs(d.Delta_plus) <= 1e-12 * scale || std::abs(d.Delta_minus) <= 1e-12 * scale) {
    std::ostringstream os;
    os << "dressed_params: resonance Delta_+ = " << d.Delta_plus << ", Delta_- = " << d.Delta_minus
       << "; adiabatic elimination of |e> is invalid";
    throw ResonanceError(os.str());
  }
  d.Omega_A = d.g_theta * d.g_theta / d.Delta_plus;
  d.Omega_B = d.G_theta * d.G_theta / d.Delta_minus;
  d.Gamma_cross = d.g_theta * d.G_theta * (2.0 * d.Delta_e - d.Delta_c) /
                  (2.0 * d.Delta_plus * d.Delta_minus);
  d.driving_force = d.OmegaB_zeta();
  d.driving_force_printed = d.g_theta * d.G_theta / d.Delta_minus;

  constexpr double huge = 1e8;
  if (!std::isfinite(d.xi) || !std::isfinite(d.zeta) || std::abs(d.xi) > huge ||
      std::abs(d.zeta) > huge) {
    d.singular = true;
    std::ostringstream os;
    os << "singular dressed parameters (theta = " << d.theta << ", xi = " << d.xi
       << ", zeta = " << d.zeta << "); displacement amplitudes diverge";
    d.warning = os.str();
  }
  return d;
}

Operator bc_subsystem(const ModelParams& p) {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 1) = p.Delta_c();
  m(0, 1) = p.lambda;
  m(1, 0) = p.lambda;
  return Operator(std::move(m));
}

Operator dressed_rotation(const DressedParams& dp, const HilbertSpace& space) {
  Matrix r = Matrix::Zero(3, 3);
  r(0, slot_minus) = dp.cos_half;   // |-> = cos |b> - sin |c>
  r(1, slot_minus) = -dp.sin_half;
  r(0, slot_plus) = dp.sin_half;    // |+> = sin |b> + cos |c>
  r(1, slot_plus) = dp.cos_half;
  r(2, slot_e) = 1.0;
  return num::embed(Operator(r), Operator::identity(space.fock_dim()), space);
}

DressedHamiltonian dressed_hamiltonian(const ModelParams& p, const HilbertSpace& space) {
  const DressedParams d = dressed_params(p);
  const int n = space.fock_dim();
  const Matrix a = annihilation(n);
  const Matrix id = Matrix::Identity(n, n);

  Operator h0 = place(slot_e, slot_e, d.Delta_e * id, space) +
                place(slot_plus, slot_plus, d.eps_plus * id, space) +
                place(slot_minus, slot_minus, d.eps_minus * id, space);
  // g(theta) A and G(theta) B written without xi, zeta.
  const Matrix gA = d.g_theta * a + d.gA_shift() * id;
  const Matrix GB = d.G_theta * a - d.GB_shift() * id;
  Operator v = place(slot_e, slot_plus, gA, space) + place(slot_e, slot_minus, -GB, space);
  return {std::move(h0), v + v.adjoint()};
}

Operator displaced_A(const DressedParams& dp, int fock_dim) {
  if (!std::isfinite(dp.xi)) throw NumericError("displaced_A: xi is not finite");
  return Operator(annihilation(fock_dim) + dp.xi * Matrix::Identity(fock_dim, fock_dim));
}

Operator displaced_B(const DressedParams& dp, int fock_dim) {
  if (!std::isfinite(dp.zeta)) throw NumericError("displaced_B: zeta is not finite");
  return Operator(annihilation(fock_dim) - dp.zeta * Matrix::Identity(fock_dim, fock_dim));
}

EffectiveHamiltonians effective_hamiltonians(const ModelParams& p, const HilbertSpace& space) {
  const DressedParams d = dressed_params(p);
  const int n = space.fock_dim();
  const Matrix a = annihilation(n);
  const Matrix ad = a.adjoint();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix x = a + ad;

  // Omega_A A A^dag + Omega_B B B^dag
  const Matrix e_field = d.Delta_e * id + (d.Omega_A + d.Omega_B) * (a * ad) +
                         (d.OmegaA_xi() - d.OmegaB_zeta()) * x +
                         (d.OmegaA_xi2() + d.OmegaB_zeta2()) * id;
  // eps_+ - Omega_A A^dag A
  const Matrix plus_field = d.eps_plus * id - d.Omega_A * (ad * a) - d.OmegaA_xi() * x -
                            d.OmegaA_xi2() * id;
  // eps_- - Omega_B B^dag B
  const Matrix minus_field = d.eps_minus * id - d.Omega_B * (ad * a) + d.OmegaB_zeta() * x -
                             d.OmegaB_zeta2() * id;
  // Gamma A^dag B
  const Matrix cross = d.Gamma_cross * (ad * a) - d.Gamma_zeta() * ad + d.Gamma_xi() * a -
                       d.Gamma_xi_zeta() * id;

  EffectiveHamiltonians out;
  out.H_e = place(slot_e, slot_e, e_field, space);
  out.H_bc_rwa = place(slot_plus, slot_plus, plus_field, space) +
                 place(slot_minus, slot_minus, minus_field, space);
  out.H_bc = out.H_bc_rwa + place(slot_plus, slot_minus, cross, space) +
             place(slot_minus, slot_plus, cross.adjoint(), space);
  out.H_minus = Operator(-d.Omega_B * (ad * a) + d.driving_force * x);
  return out;
}

}  // namespace delta_atom::model
