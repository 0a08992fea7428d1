#include "delta_atom/numkernel.hpp"

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <sstream>
#include <utility>

namespace delta_atom::num {

HilbertSpace::HilbertSpace(int fock_dim) : fock_dim_(fock_dim) {
  if (fock_dim < 2) {
    throw DimensionError("HilbertSpace: fock_dim must be >= 2, got " + std::to_string(fock_dim));
  }
}

Operator::Operator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) {
    throw DimensionError("Operator: matrix must be square");
  }
}

Operator Operator::zero(Eigen::Index dim) { return Operator(Matrix::Zero(dim, dim)); }

Operator Operator::identity(Eigen::Index dim) { return Operator(Matrix::Identity(dim, dim)); }

double Operator::hermiticity_defect() const {
  if (m_.size() == 0) return 0.0;
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

double Operator::max_abs() const {
  if (m_.size() == 0) return 0.0;
  return m_.cwiseAbs().maxCoeff();
}

bool Operator::is_hermitian(double rel_tol) const {
  return hermiticity_defect() <= rel_tol * max_abs();
}

Operator& Operator::operator+=(const Operator& o) {
  if (o.dim() != dim()) throw DimensionError("Operator +=: dimension mismatch");
  m_ += o.m_;
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  if (o.dim() != dim()) throw DimensionError("Operator -=: dimension mismatch");
  m_ -= o.m_;
  return *this;
}

Operator& Operator::operator*=(cplx s) {
  m_ *= s;
  return *this;
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double operator_norm(const Operator& op) { return operator_norm(op.matrix()); }

QuantumState::QuantumState(Vector amplitudes) : amps_(std::move(amplitudes)) {}

QuantumState QuantumState::basis(Eigen::Index dim, Eigen::Index index) {
  if (index < 0 || index >= dim) throw DimensionError("QuantumState::basis: index out of range");
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return QuantumState(std::move(v));
}

QuantumState QuantumState::normalized() const {
  const double n = norm();
  if (n == 0.0) throw NumericError("QuantumState: cannot normalize the zero vector");
  return QuantumState(amps_ / n);
}

cplx QuantumState::inner(const QuantumState& other) const {
  if (other.dim() != dim()) throw DimensionError("QuantumState::inner: dimension mismatch");
  return amps_.dot(other.amps_);  // conjugates the left argument
}

cplx QuantumState::expectation(const Operator& op) const {
  if (op.dim() != dim()) throw DimensionError("QuantumState::expectation: dimension mismatch");
  return amps_.dot(op.matrix() * amps_);
}

Operator SpectralDecomposition::reconstruct() const {
  return Operator(eigenvectors * eigenvalues.cast<cplx>().asDiagonal() * eigenvectors.adjoint());
}

Operator boson_annihilation(int fock_dim) {
  if (fock_dim < 2) {
    throw DimensionError("boson_annihilation: fock_dim must be >= 2, got " +
                         std::to_string(fock_dim));
  }
  Matrix a = Matrix::Zero(fock_dim, fock_dim);
  for (int n = 1; n < fock_dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return Operator(std::move(a));
}

Operator boson_number(int fock_dim) {
  if (fock_dim < 2) {
    throw DimensionError("boson_number: fock_dim must be >= 2, got " + std::to_string(fock_dim));
  }
  Matrix n = Matrix::Zero(fock_dim, fock_dim);
  for (int k = 0; k < fock_dim; ++k) n(k, k) = static_cast<double>(k);
  return Operator(std::move(n));
}

Operator atom_projector(Level i, Level j) {
  Matrix m = Matrix::Zero(HilbertSpace::atom_dim, HilbertSpace::atom_dim);
  m(level_index(i), level_index(j)) = 1.0;
  return Operator(std::move(m));
}

Operator embed(const Operator& atom_op, const Operator& field_op, const HilbertSpace& space) {
  if (atom_op.dim() != HilbertSpace::atom_dim) {
    throw DimensionError("embed: atom operator must be 3x3, got " + std::to_string(atom_op.dim()));
  }
  if (field_op.dim() != space.fock_dim()) {
    throw DimensionError("embed: field operator dimension " + std::to_string(field_op.dim()) +
                         " does not match fock_dim " + std::to_string(space.fock_dim()));
  }
  Matrix k = Eigen::kroneckerProduct(atom_op.matrix(), field_op.matrix()).eval();
  return Operator(std::move(k));
}

SpectralDecomposition hermitian_eig(const Operator& m, double rel_tol) {
  const double defect = m.hermiticity_defect();
  if (defect > rel_tol * m.max_abs()) {
    std::ostringstream os;
    os << "hermitian_eig: operator is not Hermitian (max|M - M^dag| = " << defect
       << ", max|M| = " << m.max_abs() << ")";
    throw HermiticityError(os.str(), defect);
  }
  const Matrix h = 0.5 * (m.matrix() + m.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericError("hermitian_eig: eigen decomposition failed");
  }
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

Propagator::Propagator(const Operator& hamiltonian) : spec_(hermitian_eig(hamiltonian)) {}

QuantumState Propagator::evolve(const QuantumState& psi0, double t) const {
  const auto& v = spec_.eigenvectors;
  if (psi0.dim() != v.rows()) throw DimensionError("Propagator::evolve: dimension mismatch");
  Vector c = v.adjoint() * psi0.amplitudes();
  for (Eigen::Index k = 0; k < c.size(); ++k) c(k) *= std::exp(-I * (spec_.eigenvalues(k) * t));
  return QuantumState(v * c);
}

QuantumState evolve_unitary(const Operator& hamiltonian, const QuantumState& psi0, double t) {
  return Propagator(hamiltonian).evolve(psi0, t);
}

QuantumState coherent_state(cplx alpha, int fock_dim) {
  if (fock_dim < 2) {
    throw DimensionError("coherent_state: fock_dim must be >= 2, got " + std::to_string(fock_dim));
  }
  const double n_mean = std::norm(alpha);
  if (n_mean > fock_dim / 4.0) {
    std::ostringstream os;
    os << "coherent_state: |alpha|^2 = " << n_mean << " exceeds fock_dim/4 = " << fock_dim / 4.0
       << "; use fock_dim >= " << fock_dim_for_amplitude(std::abs(alpha), fock_dim);
    throw TruncationError(os.str());
  }
  Vector c(fock_dim);
  c(0) = std::exp(-0.5 * n_mean);
  for (int n = 1; n < fock_dim; ++n) c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  c /= c.norm();
  return QuantumState(std::move(c));
}

int fock_dim_for_amplitude(double max_abs_alpha, int base_fock_dim) {
  int dim = std::max(base_fock_dim, 2);
  while (max_abs_alpha * max_abs_alpha > dim / 4.0) dim *= 2;
  return dim;
}

Operator expm(const Operator& a) { return Operator(a.matrix().exp()); }

}  // namespace delta_atom::num
