#include <doctest.h>

#include <cmath>
#include <numbers>

#include "delta_atom/numkernel.hpp"
#include "generators.hpp"

using namespace delta_atom;
using namespace delta_atom::num;

TEST_CASE("boson operators") {
  const Operator a2 = boson_annihilation(2);
  CHECK(a2(0, 1) == cplx(1.0));
  CHECK(a2(0, 0) == cplx(0.0));
  CHECK(a2(1, 0) == cplx(0.0));
  CHECK(a2(1, 1) == cplx(0.0));

  const Operator a4 = boson_annihilation(4);
  const Operator n4 = a4.adjoint() * a4;
  for (int k = 0; k < 4; ++k) CHECK(n4(k, k).real() == doctest::Approx(k));
  CHECK((n4.matrix() - boson_number(4).matrix()).norm() < 1e-15);

  for (int d : {2, 5, 17}) {
    const Operator a = boson_annihilation(d);
    const Operator c = commutator(a, a.adjoint());
    for (int i = 0; i < d; ++i) {
      const double expect = (i == d - 1) ? 1.0 - d : 1.0;
      CHECK(std::abs(c(i, i) - expect) < 1e-12);
    }
    CHECK((c.matrix() - Matrix(c.matrix().diagonal().asDiagonal())).norm() < 1e-12);
  }
  CHECK_THROWS_AS(boson_annihilation(1), DimensionError);
  CHECK_THROWS_AS(HilbertSpace(1), DimensionError);
}

TEST_CASE("hilbert space layout is atom-major") {
  const HilbertSpace s(7);
  CHECK(s.total_dim() == 21);
  CHECK(s.index(Level::b, 0) == 0);
  CHECK(s.index(Level::c, 3) == 10);
  CHECK(s.index(Level::e, 6) == 20);
}

TEST_CASE("embed") {
  const HilbertSpace s(5);
  const Operator id = embed(Operator::identity(3), Operator::identity(5), s);
  CHECK((id.matrix() - Matrix::Identity(15, 15)).norm() == 0.0);

  const Operator ec = embed(atom_projector(Level::e, Level::c), boson_annihilation(5), s);
  const QuantumState c1 = QuantumState::basis(15, s.index(Level::c, 1));
  const Vector out = ec.matrix() * c1.amplitudes();
  CHECK(std::abs(out(s.index(Level::e, 0)) - 1.0) < 1e-15);
  CHECK(std::abs(out.norm() - 1.0) < 1e-15);
  CHECK((ec + ec.adjoint()).is_hermitian());

  CHECK_THROWS_AS(embed(Operator::identity(2), Operator::identity(5), s), DimensionError);
  CHECK_THROWS_AS(embed(Operator::identity(3), Operator::identity(4), s), DimensionError);
}

TEST_CASE("hermitian_eig examples") {
  Matrix px(2, 2);
  px << 0, 1, 1, 0;
  const auto sd = hermitian_eig(Operator(px));
  CHECK(sd.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(sd.eigenvalues(1) == doctest::Approx(1.0));

  // Delta_c |c><c| + lambda (|c><b| + h.c.) with Delta_c = 0, lambda = 1: eps = -+1.
  Matrix hs(2, 2);
  hs << 0, 1, 1, 0;
  const auto d = hermitian_eig(Operator(hs));
  CHECK(std::abs(d.eigenvalues(0) + 1.0) < 1e-12);
  CHECK(std::abs(d.eigenvalues(1) - 1.0) < 1e-12);
}

TEST_CASE("hermitian_eig matches minor sign-change bisection") {
  auto r = testgen::rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix m = testgen::random_hermitian(r, 12);
    const auto sd = hermitian_eig(Operator(m));
    const auto oracle = testgen::bisection_eigenvalues(m);
    for (int k = 0; k < 12; ++k) CHECK(std::abs(sd.eigenvalues(k) - oracle[k]) < 1e-9);
  }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input with the defect") {
  Matrix m(2, 2);
  m << 1, 2, 0.5, 1;
  try {
    hermitian_eig(Operator(m));
    FAIL("expected HermiticityError");
  } catch (const HermiticityError& e) {
    CHECK(e.defect() == doctest::Approx(1.5));
    CHECK(e.category() == ErrorCategory::numeric);
  }
}

TEST_CASE("property: spectral reconstruction and orthonormality") {
  auto r = testgen::rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 30;
    const Matrix m = testgen::random_hermitian(r, n, 1.0 + trial);
    const auto sd = hermitian_eig(Operator(m));
    const double norm = operator_norm(m);
    CHECK(operator_norm(sd.reconstruct().matrix() - m) <= 1e-10 * norm);
    CHECK((sd.eigenvectors.adjoint() * sd.eigenvectors - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-10);
    for (int k = 1; k < n; ++k) CHECK(sd.eigenvalues(k) >= sd.eigenvalues(k - 1));
  }
}

TEST_CASE("evolve_unitary examples") {
  auto r = testgen::rng(3);
  const QuantumState psi(testgen::random_state(r, 4));
  const QuantumState same = evolve_unitary(Operator::zero(4), psi, 2.7);
  CHECK((same.amplitudes() - psi.amplitudes()).norm() < 1e-14);

  Matrix d = Matrix::Zero(2, 2);
  d(1, 1) = 0.7;
  const QuantumState ground = evolve_unitary(Operator(d), QuantumState::basis(2, 0), 5.0);
  CHECK(std::abs(std::abs(ground[0]) - 1.0) < 1e-14);
  CHECK(std::abs(ground[1]) < 1e-14);

  // Rabi oracle: P_1(t) = sin^2(g t).
  const double g = 0.37;
  Matrix h(2, 2);
  h << 0, g, g, 0;
  const Propagator prop{Operator(h)};
  const QuantumState flip = prop.evolve(QuantumState::basis(2, 0), std::numbers::pi / (2 * g));
  CHECK(std::norm(flip[0]) < 1e-9);
  CHECK(std::abs(std::norm(flip[1]) - 1.0) < 1e-9);
  for (double t : {0.1, 1.3, 4.4, 9.0}) {
    const double s = std::sin(g * t);
    CHECK(std::abs(std::norm(prop.evolve(QuantumState::basis(2, 0), t)[1]) - s * s) < 1e-12);
  }
}

TEST_CASE("property: unitarity and energy conservation") {
  auto r = testgen::rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial;
    const Matrix h = testgen::random_hermitian(r, n);
    const QuantumState psi(testgen::random_state(r, n));
    const Propagator prop{Operator(h)};
    const auto& ev = prop.spectrum().eigenvalues;
    const double gap = std::max(1e-3, (ev(n - 1) - ev(0)) / n);
    const double period = 2 * std::numbers::pi / gap;
    const double e0 = psi.expectation(Operator(h)).real();
    for (int k = 0; k <= 20; ++k) {
      const QuantumState out = prop.evolve(psi, 10.0 * period * k / 20.0);
      CHECK(std::abs(out.norm() - 1.0) <= 1e-10);
      CHECK(std::abs(out.expectation(Operator(h)).real() - e0) <= 1e-9 * (1 + std::abs(e0)));
    }
  }
}

TEST_CASE("expm agrees with the spectral propagator") {
  auto r = testgen::rng(14);
  const Matrix h = testgen::random_hermitian(r, 9);
  const QuantumState psi(testgen::random_state(r, 9));
  const double t = 1.9;
  const Operator u = expm(Operator(Matrix(-I * t * h)));
  const Vector via_expm = u.matrix() * psi.amplitudes();
  CHECK((via_expm - evolve_unitary(Operator(h), psi, t).amplitudes()).norm() < 1e-12);
}

TEST_CASE("coherent states") {
  const QuantumState vac = coherent_state(0.0, 8);
  CHECK(std::abs(vac[0] - 1.0) < 1e-15);
  CHECK(vac.amplitudes().tail(7).norm() == 0.0);

  const QuantumState one = coherent_state(1.0, 32);
  CHECK(std::abs(one.expectation(boson_number(32)).real() - 1.0) < 1e-8);

  auto r = testgen::rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const cplx a = testgen::random_amplitude(r, 2.0);
    const cplx b = testgen::random_amplitude(r, 2.0);
    const QuantumState sa = coherent_state(a, 32);
    const QuantumState sb = coherent_state(b, 32);
    CHECK(std::abs(std::abs(sb.inner(sa)) - std::exp(-0.5 * std::norm(a - b))) < 1e-8);
    CHECK(std::abs(sa.expectation(boson_annihilation(32)) - a) < 1e-8);
    CHECK(std::abs(sa.norm() - 1.0) < 1e-14);
    CHECK((sa.amplitudes() - testgen::coherent_direct(a, 32)).norm() < 1e-8);
  }
}

TEST_CASE("coherent state truncation guard") {
  CHECK_NOTHROW(coherent_state(2.0, 16));
  CHECK_THROWS_AS(coherent_state(2.01, 16), TruncationError);
  try {
    coherent_state(3.0, 16);
  } catch (const TruncationError& e) {
    CHECK(std::string(e.what()).find("fock_dim >= 64") != std::string::npos);
  }
  CHECK(fock_dim_for_amplitude(3.0, 16) == 64);
  CHECK(fock_dim_for_amplitude(0.5, 32) == 32);
}
