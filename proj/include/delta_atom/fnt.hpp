// fnt.hpp - second-order effective Hamiltonians by the generalized
// Frohlich-Nakajima (Schrieffer-Wolff) transformation.
//
// Given H = H0 + H1 with H0 diagonal in a chosen basis and H1 off-diagonal,
// the generator S solves H1 + [H0, S] = 0 and H_eff = H0 + [H1, S] / 2.

#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "delta_atom/hamiltonians.hpp"
#include "delta_atom/numkernel.hpp"

namespace delta_atom::fnt {

using num::Matrix;
using num::Operator;
using num::RealVector;

struct Decomposition {
  Operator H0;        // diagonal, basis coordinates
  Operator H1;        // zero diagonal, basis coordinates
  Matrix basis;       // unitary; columns are the basis states
  RealVector energies;

  // basis * M * basis^dag
  Operator to_original(const Operator& m) const;
};

// Throws ValidationError if the basis is not unitary to 1e-10.
Decomposition split(const Operator& h, const Matrix& basis);
Decomposition split(const Operator& h);

struct GeneratorOptions {
  double gap_rel = 1e-9;        // degenerate if |E_n - E_m| <= gap_rel * max|E|
  double coupling_rel = 1e-13;  // uncoupled if |H1_mn| <= coupling_rel * max|H1|
};

// S_mn = H1_mn / (E_n - E_m). Throws DegeneracyError for a coupled degenerate pair.
Operator generator(const Decomposition& d, const GeneratorOptions& options = {});

// ||H1 + [H0, S]|| (operator norm)
double generator_residual(const Decomposition& d, const Operator& s);

Operator effective_hamiltonian(const Decomposition& d, const Operator& s);

struct Series {
  RealVector energies_2nd;
  Matrix states_1st;  // (1 + S)|n>
  Matrix states_2nd;  // (1 + S + S^2/2)|n>
};

Series perturbation_series(const Decomposition& d, const Operator& s,
                           const GeneratorOptions& options = {});

struct FNTResult {
  Operator S;
  Operator H_eff;
  Series series;
  double residual = 0.0;
};

FNTResult run(const Decomposition& d, const GeneratorOptions& options = {});

// Random nondegenerate instance: E_n = cumulative sums of 1 + U(0, 1), H1 a
// random Hermitian matrix with zero diagonal scaled so ||H1|| / min gap = ratio.
struct RandomInstance {
  Decomposition d;
  double ratio = 0.0;
  double min_gap = 0.0;
};

RandomInstance random_instance(std::mt19937_64& rng, int dim, double ratio);

// Same H0, H1 scaled by factor.
Decomposition scaled(const Decomposition& d, double factor);

// Model case: the rotating Hamiltonian split in the dressed basis.
Decomposition model_decomposition(const model::ModelParams& p, const num::HilbertSpace& space);

// Coefficients (G1, G2, G3, G4) of
// S = G1 A|e><+| + G2 B|e><-| + G3 A^dag|+><e| + G4 B^dag|-><e|
// consistent with the generic generator (denominators Delta_+-).
std::array<double, 4> model_generator_coefficients(const model::DressedParams& dp);

// Alternative coefficients with denominators eps +- Delta,
// eps = (Delta_c + Delta_e)/2, Delta = sqrt((Delta_c - Delta_e)^2 + 4 lambda^2)/2.
std::array<double, 4> printed_generator_coefficients(const model::DressedParams& dp);

// Analytic S in dressed coordinates built from the coefficients above.
Operator model_generator(const model::DressedParams& dp, const num::HilbertSpace& space,
                         const std::array<double, 4>& coefficients);

}  // namespace delta_atom::fnt
