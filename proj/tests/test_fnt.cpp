#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "delta_atom/fnt.hpp"
#include "generators.hpp"

using namespace delta_atom;
using namespace delta_atom::fnt;
using num::cplx;
using num::Matrix;
using num::RealVector;

namespace {

Operator two_level(double delta, double g) {
  Matrix m(2, 2);
  m << 0.0, g, g, delta;
  return Operator(m);
}

// Energies of the exact spectrum, ascending.
RealVector exact_energies(const Decomposition& d) {
  return num::hermitian_eig(d.H0 + d.H1).eigenvalues;
}

double max_sorted_diff(RealVector a, RealVector b) {
  std::sort(a.data(), a.data() + a.size());
  std::sort(b.data(), b.data() + b.size());
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("split") {
  Matrix m(3, 3);
  m << 1, 0.2, 0, 0.2, 2, cplx(0, 0.3), 0, cplx(0, -0.3), 5;
  const Decomposition d = split(Operator(m));
  CHECK(d.energies(0) == 1.0);
  CHECK(d.energies(2) == 5.0);
  CHECK(d.H1.matrix().diagonal().norm() == 0.0);
  CHECK((d.H0 + d.H1).matrix() == m);

  Matrix not_unitary = Matrix::Identity(3, 3);
  not_unitary(0, 1) = 1e-6;
  CHECK_THROWS_AS(split(Operator(m), not_unitary), ValidationError);
  CHECK_THROWS_AS(split(Operator(m), Matrix::Identity(2, 2)), DimensionError);

  auto r = testgen::rng(51);
  const Matrix u = num::hermitian_eig(Operator(testgen::random_hermitian(r, 3))).eigenvectors;
  const Decomposition du = split(Operator(m), u);
  CHECK((du.to_original(du.H0 + du.H1).matrix() - m).norm() < 1e-13);
}

TEST_CASE("two-level system: generator and effective Hamiltonian") {
  const double delta = 2.0, g = 0.05;
  const FNTResult res = run(split(two_level(delta, g)));
  CHECK(std::abs(res.S(0, 1) - g / delta) < 1e-15);
  CHECK(std::abs(res.S(1, 0) + g / delta) < 1e-15);
  CHECK(res.residual < 1e-15);
  CHECK(std::abs(res.H_eff(0, 0) - (-g * g / delta)) < 1e-15);
  CHECK(std::abs(res.H_eff(1, 1) - (delta + g * g / delta)) < 1e-15);
  CHECK(std::abs(res.H_eff(0, 1)) < 1e-15);

  // Exact: (delta -+ sqrt(delta^2 + 4 g^2)) / 2
  const double root = std::sqrt(delta * delta + 4 * g * g);
  const double tol = 4 * g * g * g * g / (delta * delta * delta);
  CHECK(std::abs(res.H_eff(0, 0).real() - 0.5 * (delta - root)) < tol);
  CHECK(std::abs(res.H_eff(1, 1).real() - 0.5 * (delta + root)) < tol);
  CHECK(std::abs(res.series.energies_2nd(0) + g * g / delta) < 1e-15);
}

TEST_CASE("degenerate coupled levels are rejected; uncoupled ones are not") {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 2) = 3.0;
  m(0, 2) = m(2, 0) = 0.1;
  CHECK_NOTHROW(generator(split(Operator(m))));
  m(0, 1) = m(1, 0) = 0.1;
  try {
    generator(split(Operator(m)));
    FAIL("expected DegeneracyError");
  } catch (const DegeneracyError& e) {
    CHECK(std::min(e.row(), e.col()) == 0);
    CHECK(std::max(e.row(), e.col()) == 1);
    CHECK(std::string(e.what()).find("degenerate") != std::string::npos);
  }
}

TEST_CASE("property: generator identities on random instances") {
  auto r = testgen::rng(52);
  std::uniform_int_distribution<int> dim(2, 14);
  std::uniform_real_distribution<double> ratio(0.01, 0.2);
  for (int trial = 0; trial < 100; ++trial) {
    const RandomInstance ri = random_instance(r, dim(r), ratio(r));
    const FNTResult res = run(ri.d);
    const double h1 = num::operator_norm(ri.d.H1);
    CHECK(num::operator_norm(ri.d.H1) == doctest::Approx(ri.ratio * ri.min_gap).epsilon(1e-10));
    CHECK((res.S.matrix() + res.S.matrix().adjoint()).norm() < 1e-14);
    CHECK(res.residual <= 1e-12 * h1);
    CHECK(std::abs(res.H_eff.matrix().trace() - (ri.d.H0 + ri.d.H1).matrix().trace()) < 1e-12 * ri.d.energies.maxCoeff());
    CHECK(res.H_eff.is_hermitian());
    const double bound = h1 * h1 * h1 / (ri.min_gap * ri.min_gap);
    const RealVector exact = exact_energies(ri.d);
    CHECK(max_sorted_diff(res.series.energies_2nd, exact) <= 10 * bound);
    CHECK(max_sorted_diff(num::hermitian_eig(res.H_eff).eigenvalues, exact) <= 10 * bound);
  }
}

TEST_CASE("property: exp(-S) H exp(S) agrees with H_eff to third order") {
  auto r = testgen::rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const RandomInstance ri = random_instance(r, 3 + trial % 8, 0.05);
    const FNTResult res = run(ri.d);
    const Matrix es = num::expm(res.S).matrix();
    const Matrix emin = num::expm(cplx(-1.0) * res.S).matrix();
    const Matrix rotated = emin * (ri.d.H0 + ri.d.H1).matrix() * es;
    const double h1 = num::operator_norm(ri.d.H1);
    CHECK(num::operator_norm(rotated - res.H_eff.matrix()) <= 10 * h1 * h1 * h1 / (ri.min_gap * ri.min_gap));
    // (1 + S)|n> is normalized to first order.
    const Matrix g = res.series.states_2nd.adjoint() * res.series.states_2nd;
    CHECK((g - Matrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() <= 10 * std::pow(h1 / ri.min_gap, 3));
  }
}

TEST_CASE("halving the coupling reduces the energy error about eightfold") {
  auto r = testgen::rng(54);
  std::vector<double> factors;
  for (int trial = 0; trial < 60; ++trial) {
    const RandomInstance ri = random_instance(r, 3 + trial % 10, 0.05);
    const Decomposition half = scaled(ri.d, 0.5);
    const double e1 = max_sorted_diff(run(ri.d).series.energies_2nd, exact_energies(ri.d));
    const double e2 = max_sorted_diff(run(half).series.energies_2nd, exact_energies(half));
    factors.push_back(e1 / e2);
  }
  std::sort(factors.begin(), factors.end());
  const double median = factors[factors.size() / 2];
  CHECK(median > 6.0);
  CHECK(median < 10.0);
}

TEST_CASE("model: analytic generator matches the generic engine") {
  const num::HilbertSpace s(12);
  auto r = testgen::rng(55);
  std::uniform_real_distribution<double> u(-1.0, 1.0), pos(0.2, 1.2);
  for (int trial = 0; trial < 20; ++trial) {
    const model::ModelParams p =
        model::ModelParams::from_detunings(6.0 + 2 * u(r), u(r), 0.3 * pos(r), 0.3 * pos(r), pos(r));
    const model::DressedParams dp = model::dressed_params(p);
    const Decomposition d = model_decomposition(p, s);
    const Operator generic = generator(d);
    const Operator analytic = model_generator(dp, s, model_generator_coefficients(dp));
    CHECK(num::operator_norm(generic - analytic) < 1e-10);
  }
}

TEST_CASE("model: the eps +- Delta coefficients disagree with the generic engine") {
  const num::HilbertSpace s(12);
  const model::ModelParams p = model::ModelParams::from_detunings(3, 0.5, 0.3, 0.2, 1);
  const model::DressedParams dp = model::dressed_params(p);
  const auto printed = printed_generator_coefficients(dp);
  const auto consistent = model_generator_coefficients(dp);
  CHECK(printed[0] != doctest::Approx(consistent[0]));
  CHECK(printed[1] != doctest::Approx(consistent[1]));
  const Operator generic = generator(model_decomposition(p, s));
  const Operator alt = model_generator(dp, s, printed);
  CHECK(num::operator_norm(generic - alt) > 1e-2);
}

TEST_CASE("model: effective Hamiltonian equals the analytic elimination") {
  for (const auto& pt : {std::array<double, 5>{3, 0, 0.2, 0.25, 1}, std::array<double, 5>{5, 0.7, 0.3, 0.2, 1.1},
                         std::array<double, 5>{-4, -0.4, 0.25, 0.3, 0.8}}) {
    const int n = 16;
    const num::HilbertSpace s(n);
    const model::ModelParams p = model::ModelParams::from_detunings(pt[0], pt[1], pt[2], pt[3], pt[4]);
    const model::DressedParams dp = model::dressed_params(p);
    const Decomposition d = model_decomposition(p, s);
    const FNTResult res = run(d);
    const model::EffectiveHamiltonians eff = model::effective_hamiltonians(p, s);
    CHECK(num::operator_norm(res.H_eff - (eff.H_e + eff.H_bc)) < 1e-10);

    // Coefficients read off from matrix elements.
    const auto& h = res.H_eff;
    const auto at = [&](int slot_i, int ni, int slot_j, int nj) { return h(slot_i * n + ni, slot_j * n + nj); };
    using model::slot_minus;
    using model::slot_plus;
    const cplx omega_a = at(slot_plus, 0, slot_plus, 0) - at(slot_plus, 1, slot_plus, 1);
    const cplx omega_b = at(slot_minus, 0, slot_minus, 0) - at(slot_minus, 1, slot_minus, 1);
    const cplx gamma = at(slot_plus, 1, slot_minus, 1) - at(slot_plus, 0, slot_minus, 0);
    CHECK(std::abs(omega_a - dp.Omega_A) < 1e-12);
    CHECK(std::abs(omega_b - dp.Omega_B) < 1e-12);
    CHECK(std::abs(gamma - dp.Gamma_cross) < 1e-12);
  }
}
