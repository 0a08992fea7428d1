#include "delta_atom/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "delta_atom/errors.hpp"

namespace delta_atom::lanczos {
namespace {

// Orthogonalize the columns of z against basis(:, 0:used) twice, then
// orthonormalize them among themselves. Columns that collapse are replaced by
// fresh random directions so the block keeps its width.
Eigen::MatrixXd orthonormal_block(const Eigen::MatrixXd& basis, Eigen::Index used,
                                  Eigen::MatrixXd z, std::mt19937_64& rng,
                                  const ProjectFn& project) {
  std::normal_distribution<double> normal;
  const Eigen::Index n = z.rows();
  Eigen::MatrixXd out(n, 0);
  for (Eigen::Index c = 0; c < z.cols(); ++c) {
    Eigen::VectorXd v = z.col(c);
    for (int attempt = 0; attempt < 4; ++attempt) {
      const double start = v.norm();
      for (int pass = 0; pass < 2; ++pass) {
        if (used > 0) v -= basis.leftCols(used) * (basis.leftCols(used).transpose() * v);
        if (out.cols() > 0) v -= out * (out.transpose() * v);
      }
      const double left = v.norm();
      if (left > 1e-10 * std::max(start, 1e-300)) {
        out.conservativeResize(n, out.cols() + 1);
        out.col(out.cols() - 1) = v / left;
        break;
      }
      for (Eigen::Index i = 0; i < n; ++i) v(i) = normal(rng);
      if (project) project(v);
    }
  }
  return out;
}

}  // namespace

Result lowest_eigenpairs(const ApplyFn& apply, Eigen::Index n, int k, const Options& options,
                         const ProjectFn& project) {
  if (k < 1 || k >= n) throw ValidationError("lanczos: need 1 <= k < n");
  const int b = options.block_size > 0 ? options.block_size : k + 2;
  const Eigen::Index max_basis = std::min<Eigen::Index>(std::max(options.max_basis, 4 * b), n);
  const Eigen::Index keep = std::min<Eigen::Index>(std::max<Eigen::Index>(2 * b, k + b), max_basis / 2);

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;

  Eigen::MatrixXd basis(n, max_basis);
  Eigen::MatrixXd applied(n, max_basis);
  Eigen::Index used = 0;

  Eigen::MatrixXd start(n, b);
  for (Eigen::Index c = 0; c < b; ++c) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = normal(rng);
    if (project) project(v);
    start.col(c) = v;
  }
  Eigen::MatrixXd block = orthonormal_block(basis, 0, start, rng, project);

  Result result;
  Eigen::VectorXd x(n), y(n);
  std::vector<double> last_residuals;

  for (int restart = 0; restart <= options.max_restarts; ++restart) {
    // Expand the Krylov basis block by block.
    while (used + block.cols() <= max_basis && block.cols() > 0) {
      const Eigen::Index first = used;
      for (Eigen::Index c = 0; c < block.cols(); ++c) {
        x = block.col(c);
        apply(x, y);
        if (project) project(y);
        ++result.matvecs;
        basis.col(used) = x;
        applied.col(used) = y;
        ++used;
      }
      if (used + b > max_basis) break;
      block = orthonormal_block(basis, used, applied.middleCols(first, used - first), rng, project);
    }

    // Rayleigh-Ritz on the current basis.
    Eigen::MatrixXd t = basis.leftCols(used).transpose() * applied.leftCols(used);
    t = 0.5 * (t + t.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> rr(t);
    if (rr.info() != Eigen::Success) throw ConvergenceError("lanczos: Rayleigh-Ritz failed");
    const Eigen::Index kept = std::min<Eigen::Index>(keep, used);
    const Eigen::MatrixXd s = rr.eigenvectors().leftCols(kept);
    const Eigen::VectorXd theta = rr.eigenvalues().head(kept);
    Eigen::MatrixXd ritz = basis.leftCols(used) * s;
    Eigen::MatrixXd ritz_applied = applied.leftCols(used) * s;
    Eigen::MatrixXd resid = ritz_applied - ritz * theta.asDiagonal();

    last_residuals.assign(static_cast<std::size_t>(k), 0.0);
    bool converged = true;
    for (int i = 0; i < k; ++i) {
      last_residuals[static_cast<std::size_t>(i)] = resid.col(i).norm();
      if (last_residuals[static_cast<std::size_t>(i)] > options.tol * std::max(1.0, std::abs(theta(i)))) {
        converged = false;
      }
    }
    if (converged) {
      result.values = theta.head(k);
      result.vectors = ritz.leftCols(k);
      result.residuals = last_residuals;
      result.restarts = restart;
      return result;
    }

    // Thick restart: keep the lowest Ritz pairs, continue from their residuals.
    basis.leftCols(kept) = ritz;
    applied.leftCols(kept) = ritz_applied;
    used = kept;
    block = orthonormal_block(basis, used, resid.leftCols(std::min<Eigen::Index>(b, kept)), rng, project);
  }

  std::ostringstream os;
  os << "lanczos: lowest " << k << " eigenpairs not converged after " << options.max_restarts
     << " restarts (" << result.matvecs << " matvecs, tol " << options.tol << "); residuals:";
  for (double r : last_residuals) os << ' ' << r;
  throw ConvergenceError(os.str());
}

}  // namespace delta_atom::lanczos
