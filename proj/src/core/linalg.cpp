#include "polyinv/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>

namespace polyinv {

std::vector<std::complex<double>> eigenvalues_float(const std::vector<double>& row_major, std::size_t n,
                                                    double tol) {
  if (row_major.size() != n * n) throw Error(ErrorCode::Dimension, "eigenvalues of a non-square matrix");
  if (tol <= 0) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (n == 0) return {};
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double v = row_major[i * n + j];
      if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite matrix entry");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  if (solver.info() != Eigen::Success)
    throw NumericalError("eigenvalue iteration did not converge", std::nan(""));

  const double scale = std::pow(std::max(1.0, m.norm()), static_cast<double>(n));
  const Eigen::MatrixXcd mc = m.cast<std::complex<double>>();
  std::vector<std::complex<double>> out;
  out.reserve(n);
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    std::complex<double> lambda = solver.eigenvalues()(k);
    Eigen::MatrixXcd shifted = mc - lambda * Eigen::MatrixXcd::Identity(mc.rows(), mc.cols());
    double residual = std::abs(shifted.partialPivLu().determinant()) / scale;
    if (!(residual <= tol)) throw NumericalError("eigenvalue residual above tolerance", residual);
    out.push_back(lambda);
  }
  return out;
}

}  // namespace polyinv
