// numkernel.hpp - truncated Fock space, dense operator algebra, Hermitian
// spectral decomposition and exact unitary propagation.
//
// Joint basis convention (fixed, atom-major):
//   index = atom_index * fock_dim + photon_number,  atom order (b, c, e).
// All quantities use hbar = 1.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

#include "delta_atom/errors.hpp"

namespace delta_atom::num {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr cplx I{0.0, 1.0};

// Bare atomic levels in basis order.
enum class Level : int { b = 0, c = 1, e = 2 };

inline constexpr int level_index(Level l) { return static_cast<int>(l); }

class HilbertSpace {
 public:
  static constexpr int atom_dim = 3;

  explicit HilbertSpace(int fock_dim);

  int fock_dim() const noexcept { return fock_dim_; }
  int total_dim() const noexcept { return atom_dim * fock_dim_; }

  int index(int atom, int photons) const noexcept { return atom * fock_dim_ + photons; }
  int index(Level atom, int photons) const noexcept {
    return index(level_index(atom), photons);
  }

  friend bool operator==(const HilbertSpace&, const HilbertSpace&) = default;

 private:
  int fock_dim_;
};

// Dense square complex matrix. Value type; cheap enough to copy at the
// dimensions in scope (total_dim <= 3 * 64).
class Operator {
 public:
  Operator() = default;
  explicit Operator(Matrix m);

  static Operator zero(Eigen::Index dim);
  static Operator identity(Eigen::Index dim);

  Eigen::Index dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  cplx operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  Operator adjoint() const { return Operator(m_.adjoint()); }

  // max|M - M^dag|, absolute.
  double hermiticity_defect() const;
  double max_abs() const;
  // True if max|M - M^dag| <= rel_tol * max|M|.
  bool is_hermitian(double rel_tol = 1e-12) const;

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(cplx s);

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(const Operator& a, const Operator& b) {
    return Operator(a.m_ * b.m_);
  }
  friend Operator operator*(cplx s, Operator a) { return a *= s; }
  friend Operator operator*(Operator a, cplx s) { return a *= s; }

 private:
  Matrix m_;
};

Operator commutator(const Operator& a, const Operator& b);

// Largest singular value.
double operator_norm(const Operator& op);
double operator_norm(const Matrix& m);

class QuantumState {
 public:
  QuantumState() = default;
  explicit QuantumState(Vector amplitudes);

  // |index>, normalized.
  static QuantumState basis(Eigen::Index dim, Eigen::Index index);

  Eigen::Index dim() const noexcept { return amps_.size(); }
  const Vector& amplitudes() const noexcept { return amps_; }
  cplx operator[](Eigen::Index i) const { return amps_(i); }

  double norm() const { return amps_.norm(); }
  QuantumState normalized() const;

  // <this|other>
  cplx inner(const QuantumState& other) const;
  cplx expectation(const Operator& op) const;

 private:
  Vector amps_;
};

struct SpectralDecomposition {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // columns, unitary

  Operator reconstruct() const;
};

// Truncated annihilation operator: entry (n-1, n) = sqrt(n).
Operator boson_annihilation(int fock_dim);
Operator boson_number(int fock_dim);

// |i><j| on the three-level atom.
Operator atom_projector(Level i, Level j);

// atom_op (3x3) (x) field_op (fock_dim x fock_dim), atom-major.
Operator embed(const Operator& atom_op, const Operator& field_op, const HilbertSpace& space);

// Throws HermiticityError if M is not Hermitian to rel_tol.
SpectralDecomposition hermitian_eig(const Operator& m, double rel_tol = 1e-12);

// Reusable exp(-iHt) for a fixed time-independent Hermitian H.
class Propagator {
 public:
  explicit Propagator(const Operator& hamiltonian);

  QuantumState evolve(const QuantumState& psi0, double t) const;
  const SpectralDecomposition& spectrum() const noexcept { return spec_; }

 private:
  SpectralDecomposition spec_;
};

QuantumState evolve_unitary(const Operator& hamiltonian, const QuantumState& psi0, double t);

// Truncated, renormalized coherent state. Requires |alpha|^2 <= fock_dim / 4.
QuantumState coherent_state(cplx alpha, int fock_dim);

// Smallest fock_dim (base doubled as needed) satisfying the coherent-state
// truncation guard for amplitudes up to max_abs_alpha.
int fock_dim_for_amplitude(double max_abs_alpha, int base_fock_dim);

// Dense matrix exponential by scaling and squaring.
Operator expm(const Operator& a);

}  // namespace delta_atom::num
