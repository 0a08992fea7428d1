#include "delta_atom/dynamics.hpp"

#include <cmath>
#include <sstream>

namespace delta_atom::dyn {

using num::I;
using num::Matrix;
using num::Operator;
using num::Vector;

cplx coherent_amplitude(double x, double omega, double t) {
  return x * (1.0 - std::exp(I * (omega * t)));
}

CatState cat_evolution(const model::DressedParams& dp, double t) {
  if (!std::isfinite(dp.xi) || !std::isfinite(dp.zeta)) {
    throw NumericError("cat_evolution: xi or zeta is not finite (" + dp.warning + ")");
  }
  CatState c;
  c.weight_plus = dp.sin_half;
  c.weight_minus = dp.cos_half;
  c.alpha_plus = coherent_amplitude(-dp.xi, dp.Omega_A, t);
  c.alpha_minus = coherent_amplitude(dp.zeta, dp.Omega_B, t);
  c.phase_plus = std::exp(I * (-dp.eps_plus * t + dp.xi * dp.xi * std::sin(dp.Omega_A * t)));
  c.phase_minus = std::exp(I * (-dp.eps_minus * t + dp.zeta * dp.zeta * std::sin(dp.Omega_B * t)));
  c.phase_plus_printed = std::exp(I * dp.xi * dp.xi * std::exp(-I * (dp.Omega_A * t)));
  c.phase_minus_printed = std::exp(I * dp.zeta * dp.zeta * std::exp(-I * (dp.Omega_B * t)));
  return c;
}

QuantumState cat_state_vector(const model::DressedParams& dp, const HilbertSpace& space, double t,
                              bool printed_phases) {
  const CatState c = cat_evolution(dp, t);
  const int n = space.fock_dim();
  const Vector plus = num::coherent_state(c.alpha_plus, n).amplitudes();
  const Vector minus = num::coherent_state(c.alpha_minus, n).amplitudes();
  const cplx pp = printed_phases ? c.phase_plus_printed : c.phase_plus;
  const cplx pm = printed_phases ? c.phase_minus_printed : c.phase_minus;
  Vector v = Vector::Zero(space.total_dim());
  v.segment(model::slot_plus * n, n) = c.weight_plus * pp * plus;
  v.segment(model::slot_minus * n, n) = c.weight_minus * pm * minus;
  return QuantumState(std::move(v));
}

double overlap_y(const model::DressedParams& dp, double t) {
  const double xi = dp.xi;
  const double ze = dp.zeta;
  const double s = std::sin(0.5 * t * (dp.Omega_B - dp.Omega_A));
  return 2.0 * (ze + xi) * (ze + xi) - 4.0 * ze * xi * s * s -
         2.0 * ze * (ze + xi) * std::cos(dp.Omega_B * t) -
         2.0 * xi * (ze + xi) * std::cos(dp.Omega_A * t);
}

double overlap_F(const model::DressedParams& dp, double t) {
  return std::exp(-0.5 * overlap_y(dp, t));
}

double overlap_y_fock(const model::DressedParams& dp, double t, int fock_dim) {
  const CatState c = cat_evolution(dp, t);
  const QuantumState a = num::coherent_state(c.alpha_minus, fock_dim);
  const QuantumState b = num::coherent_state(c.alpha_plus, fock_dim);
  return -2.0 * std::log(std::abs(a.inner(b)));
}

double photon_number(const model::DressedParams& dp, double t) {
  // 4 (Omega_B zeta)^2 [sin(Omega_B t/2) / Omega_B]^2, finite as Omega_B -> 0.
  const double w = dp.Omega_B;
  const double q = (w == 0.0) ? 0.5 * t : std::sin(0.5 * w * t) / w;
  const double f = dp.OmegaB_zeta();
  return 4.0 * f * f * q * q;
}

Rate generation_rate(const model::DressedParams& dp, double t) {
  const double s = std::sin(dp.Omega_B * t);
  Rate r;
  r.derivative = std::abs(2.0 * dp.OmegaB_zeta2() * s);
  r.printed = std::abs(2.0 * dp.g_theta * dp.g_theta / dp.Delta_minus * s);
  return r;
}

std::vector<double> uniform_times(double t_end, int n) {
  if (n < 2) throw ValidationError("uniform_times: need at least 2 samples");
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = t_end * i / (n - 1);
  return t;
}

Trajectory evolve_and_compare(const model::ModelParams& params, const HilbertSpace& space,
                              const QuantumState& psi0, const std::vector<double>& times,
                              const CompareOptions& options) {
  const int n = space.fock_dim();
  if (psi0.dim() != space.total_dim()) throw DimensionError("evolve_and_compare: psi0 dimension");
  if (std::abs(psi0.norm() - 1.0) > 1e-10) throw ValidationError("evolve_and_compare: psi0 not normalized");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw ValidationError("evolve_and_compare: times must increase");
  }

  const model::DressedParams dp = model::dressed_params(params);
  const Operator h = model::rotating_hamiltonian(params, space);
  const Operator r = model::dressed_rotation(dp, space);
  const model::EffectiveHamiltonians eff = model::effective_hamiltonians(params, space);
  const Operator h_eff = r * (eff.H_bc_rwa + eff.H_e) * r.adjoint();
  const num::Propagator exact(h);
  const num::Propagator approx(h_eff);
  const Operator n_op =
      num::embed(Operator::identity(HilbertSpace::atom_dim), num::boson_number(n), space);

  Trajectory out;
  out.times = times;
  auto& obs = out.observables;
  const bool cat_ok = options.analytic_cat && std::isfinite(dp.xi) && std::isfinite(dp.zeta);

  for (double t : times) {
    const QuantumState ex = exact.evolve(psi0, t);
    const QuantumState ef = approx.evolve(psi0, t);
    const Vector& v = ex.amplitudes();
    const double nbar = ex.expectation(n_op).real();
    if (nbar > n / 4.0) {
      std::ostringstream os;
      os << "evolve_and_compare: <a^dag a> = " << nbar << " exceeds fock_dim/4 at t = " << t
         << "; use fock_dim >= " << num::fock_dim_for_amplitude(std::sqrt(nbar), n);
      throw TruncationError(os.str());
    }
    obs["norm"].push_back(ex.norm());
    obs["energy"].push_back(ex.expectation(h).real());
    obs["pop_b"].push_back(v.segment(0, n).squaredNorm());
    obs["pop_c"].push_back(v.segment(n, n).squaredNorm());
    obs["pop_e"].push_back(v.segment(2 * n, n).squaredNorm());
    obs["photon_number"].push_back(nbar);
    obs["fidelity"].push_back(std::abs(ef.inner(ex)));

    const Vector dex = r.matrix().adjoint() * v;
    const Vector def = r.matrix().adjoint() * ef.amplitudes();
    double branch = 0.0;
    for (int s = 0; s < HilbertSpace::atom_dim; ++s) {
      branch += std::abs(def.segment(s * n, n).dot(dex.segment(s * n, n)));
    }
    obs["branch_fidelity"].push_back(branch);
    obs["y"].push_back(std::isfinite(dp.xi) && std::isfinite(dp.zeta) ? overlap_y(dp, t) : 0.0);

    if (cat_ok) {
      const Vector cat = cat_state_vector(dp, space, t).amplitudes();
      double f = 0.0;
      for (int s : {model::slot_minus, model::slot_plus}) {
        f += std::abs(cat.segment(s * n, n).dot(dex.segment(s * n, n)));
      }
      obs["cat_fidelity"].push_back(f);
      obs["cat_fidelity_full"].push_back(std::abs(cat.dot(dex)));
    }
    if (options.keep_states) out.states.push_back(ex);
  }
  return out;
}

}  // namespace delta_atom::dyn
