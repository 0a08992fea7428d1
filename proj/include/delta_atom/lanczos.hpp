// lanczos.hpp - lowest eigenpairs of a large real symmetric operator given
// only as a matrix-vector product. Thick-restart block Krylov with full
// reorthogonalization and explicit Ritz residuals.

#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <vector>

namespace delta_atom::lanczos {

struct Options {
  int block_size = 0;     // 0 -> k + 2
  int max_basis = 160;    // Krylov basis size before a thick restart
  int max_restarts = 200;
  double tol = 1e-11;     // ||A x - theta x|| <= tol * max(1, |theta|)
  std::uint64_t seed = 0x5eedULL;
};

struct Result {
  Eigen::VectorXd values;        // ascending, k entries
  Eigen::MatrixXd vectors;       // n x k, orthonormal columns
  std::vector<double> residuals;
  int restarts = 0;
  long matvecs = 0;
};

using ApplyFn = std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>;
// Projects a vector onto an invariant subspace in place (optional).
using ProjectFn = std::function<void(Eigen::VectorXd&)>;

// Throws ConvergenceError (with the residual history) if the lowest k pairs
// do not converge within max_restarts.
Result lowest_eigenpairs(const ApplyFn& apply, Eigen::Index n, int k, const Options& options = {},
                         const ProjectFn& project = {});

}  // namespace delta_atom::lanczos
