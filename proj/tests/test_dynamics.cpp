#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "delta_atom/dynamics.hpp"
#include "generators.hpp"

using namespace delta_atom;
using namespace delta_atom::dyn;
using num::Level;
using num::Matrix;
using num::Operator;
using std::numbers::pi;

namespace {

model::DressedParams reference() {
  return model::dressed_params(model::ModelParams::from_detunings(3, 0, 0.8, 0.8, 1));
}

double overlap_abs(const QuantumState& a, const QuantumState& b) {
  return std::abs(a.inner(b)) / (a.norm() * b.norm());
}

}  // namespace

TEST_CASE("coherent amplitude") {
  CHECK(std::abs(coherent_amplitude(1.3, 0.2, 0.0)) == 0.0);
  CHECK(std::abs(coherent_amplitude(1.3, 0.2, pi / 0.2)) == doctest::Approx(2.6));
  CHECK(std::abs(coherent_amplitude(1.3, 0.2, 2 * pi / 0.2)) < 1e-14);
  const model::DressedParams d = reference();
  const CatState c = cat_evolution(d, pi / d.Omega_B);
  CHECK(std::abs(c.alpha_minus) == doctest::Approx(2 * d.zeta));
  CHECK(c.weight_minus == doctest::Approx(std::cos(pi / 4)));
  CHECK(c.weight_plus == doctest::Approx(std::sin(pi / 4)));
  CHECK(std::abs(c.phase_plus) == doctest::Approx(1.0));
  const model::DressedParams singular =
      model::dressed_params(model::ModelParams::from_detunings(3, 1, 0.8, 0.8, 0));
  CHECK_THROWS_AS(cat_evolution(singular, 1.0), NumericError);
}

TEST_CASE("analytic cat state solves the RWA effective dynamics") {
  const int n = 64;
  const HilbertSpace s(n);
  auto r = testgen::rng(61);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (int trial = 0; trial < 4; ++trial) {
    const model::ModelParams p = model::ModelParams::from_detunings(4 + u(r), u(r), 0.8, 0.8 + 0.2 * u(r), 1);
    const model::DressedParams d = model::dressed_params(p);
    const num::Propagator prop(model::effective_hamiltonians(p, s).H_bc_rwa);
    const QuantumState b0 = QuantumState::basis(s.total_dim(), s.index(Level::b, 0));
    const Operator rot = model::dressed_rotation(d, s);
    const QuantumState start(rot.matrix().adjoint() * b0.amplitudes());
    bool printed_fails = false;
    for (double frac : {0.0, 0.13, 0.5, 0.77, 1.4}) {
      const double t = frac * 2 * pi / d.Omega_B;
      const QuantumState exact = prop.evolve(start, t);
      const QuantumState cat = cat_state_vector(d, s, t);
      CHECK(cat.norm() == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(overlap_abs(exact, cat) > 1 - 1e-8);
      CHECK((exact.amplitudes() - cat.amplitudes()).norm() < 1e-7);
      if (frac > 0 && (exact.amplitudes() - cat_state_vector(d, s, t, true).amplitudes()).norm() > 1e-3) {
        printed_fails = true;
      }
    }
    CHECK(printed_fails);
  }
}

TEST_CASE("overlap exponent") {
  const model::DressedParams d = reference();
  CHECK(overlap_y(d, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
  auto r = testgen::rng(62);
  std::uniform_real_distribution<double> t(0.0, 500.0);
  for (int i = 0; i < 200; ++i) {
    const double ti = t(r);
    const CatState c = cat_evolution(d, ti);
    const double y = overlap_y(d, ti);
    CHECK(y >= -1e-12);
    CHECK(std::abs(y - std::norm(c.alpha_minus - c.alpha_plus)) < 1e-10 * (1 + y));
    CHECK(overlap_F(d, ti) == doctest::Approx(std::exp(-y / 2)));
    CHECK(std::abs(y - overlap_y_fock(d, ti, 64)) < 1e-8);
  }
}

TEST_CASE("overlap exponent is periodic for commensurate shifts") {
  // Delta_c = 0, g = G, Delta_e = 3: Delta_- / Delta_+ = 2, so Omega_A = 2 Omega_B.
  const model::DressedParams d = reference();
  CHECK(d.Omega_A == doctest::Approx(2 * d.Omega_B));
  const double period = 2 * pi / d.Omega_B;
  for (double t : {0.0, 1.0, 7.3, 21.9}) {
    CHECK(std::abs(overlap_y(d, t + period) - overlap_y(d, t)) < 1e-10);
  }
  CHECK(std::abs(overlap_y(d, period)) < 1e-10);
}

TEST_CASE("photon number and generation rate") {
  const int n = 64;
  auto r = testgen::rng(63);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const model::ModelParams p = model::ModelParams::from_detunings(4 + u(r), u(r), 0.8, 0.6 + 0.2 * u(r), 1);
    const model::DressedParams d = model::dressed_params(p);
    const num::Propagator prop(model::effective_hamiltonians(p, HilbertSpace(n)).H_minus);
    const Operator number = num::boson_number(n);
    const QuantumState vac = QuantumState::basis(n, 0);
    for (double t : {0.0, 3.0, 17.0, 55.0}) {
      const double exact = prop.evolve(vac, t).expectation(number).real();
      CHECK(std::abs(exact - photon_number(d, t)) < 1e-8);
      const double h = 1e-4;
      const double fd = (photon_number(d, t + h) - photon_number(d, t - h)) / (2 * h);
      const Rate rate = generation_rate(d, t);
      CHECK(std::abs(std::abs(fd) - rate.derivative) <= 1e-6 * std::max(1.0, rate.derivative));
      CHECK(rate.printed == doctest::Approx(2 * d.g_theta * d.g_theta / d.Delta_minus * std::abs(std::sin(d.Omega_B * t))));
    }
  }
  const model::DressedParams none = model::dressed_params(model::ModelParams::from_detunings(3, 1, 0.8, 0.9, 0));
  CHECK(photon_number(none, 10.0) == 0.0);
  CHECK(generation_rate(none, 10.0).derivative == 0.0);
}

TEST_CASE("evolve_and_compare") {
  const HilbertSpace s(12);
  const QuantumState b0 = QuantumState::basis(s.total_dim(), s.index(Level::b, 0));
  const std::vector<double> times = uniform_times(20.0, 11);
  CHECK(times.size() == 11);
  CHECK(times.back() == 20.0);

  const model::ModelParams free = model::ModelParams::from_detunings(3, 0.5, 0, 0, 1);
  const Trajectory tr = evolve_and_compare(free, s, b0, times);
  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(tr.observables.at("fidelity")[i] > 1 - 1e-10);
    CHECK(tr.observables.at("norm")[i] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tr.observables.at("pop_e")[i] < 1e-20);
    CHECK(tr.observables.at("photon_number")[i] < 1e-20);
  }
  CHECK(tr.states.empty());

  CompareOptions keep;
  keep.keep_states = true;
  keep.analytic_cat = true;
  const model::ModelParams p = model::ModelParams::from_detunings(3, 0, 0.25, 0.2, 1);
  const Trajectory tc = evolve_and_compare(p, HilbertSpace(24), QuantumState::basis(72, 0), times, keep);
  CHECK(tc.states.size() == times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(tc.observables.at("energy")[i] == doctest::Approx(tc.observables.at("energy")[0]).epsilon(1e-10));
    CHECK(tc.observables.at("cat_fidelity")[i] > 0.9);
    const double pops = tc.observables.at("pop_b")[i] + tc.observables.at("pop_c")[i] + tc.observables.at("pop_e")[i];
    CHECK(pops == doctest::Approx(1.0));
  }

  // Large displacement in a tiny Fock space.
  const model::ModelParams big = model::ModelParams::from_detunings(6, 1, 0.5, 0.5, 0.5);
  const model::DressedParams db = model::dressed_params(big);
  CHECK_THROWS_AS(evolve_and_compare(big, HilbertSpace(16), QuantumState::basis(48, 0),
                                     uniform_times(pi / db.Omega_B, 9)),
                  TruncationError);
}
