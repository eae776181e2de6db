#include "airdrop/linalg.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "airdrop/errors.hpp"
#include "airdrop/util.hpp"

namespace airdrop {

bool cholesky_lower(const Eigen::MatrixXd& a, Eigen::MatrixXd& lower,
                    int& bad_minor) {
  const Eigen::Index n = a.rows();
  lower = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double d = a(j, j);
    for (Eigen::Index k = 0; k < j; ++k) d -= lower(j, k) * lower(j, k);
    if (!(d > 0.0) || !std::isfinite(d)) {
      bad_minor = static_cast<int>(j);
      return false;
    }
    const double ljj = std::sqrt(d);
    lower(j, j) = ljj;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= lower(i, k) * lower(j, k);
      lower(i, j) = s / ljj;
    }
  }
  bad_minor = -1;
  return true;
}

double log_det_from_cholesky(const Eigen::MatrixXd& lower) {
  KahanSum sum;
  for (Eigen::Index i = 0; i < lower.rows(); ++i) sum.add(std::log(lower(i, i)));
  return 2.0 * sum.value();
}

double spd_log_det(const Eigen::MatrixXd& a, double scale) {
  Eigen::MatrixXd lower;
  int bad = -1;
  if (cholesky_lower(a, lower, bad)) return log_det_from_cholesky(lower);
  const Eigen::Index n = a.rows();
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  for (double level : {1e-9, 1e-6}) {
    if (cholesky_lower(a + level * scale * eye, lower, bad)) {
      return log_det_from_cholesky(lower);
    }
  }
  throw NotPositiveDefinite(
      "matrix not positive definite after jitter (leading minor " +
          std::to_string(bad) + ")",
      bad);
}

Eigen::VectorXd cholesky_solve(const Eigen::MatrixXd& lower,
                               const Eigen::VectorXd& b) {
  Eigen::VectorXd y =
      lower.triangularView<Eigen::Lower>().solve(b);
  return lower.transpose().triangularView<Eigen::Upper>().solve(y);
}

Eigen::MatrixXd cholesky_solve(const Eigen::MatrixXd& lower,
                               const Eigen::MatrixXd& b) {
  Eigen::MatrixXd y =
      lower.triangularView<Eigen::Lower>().solve(b);
  return lower.transpose().triangularView<Eigen::Upper>().solve(y);
}

Eigen::Matrix2d psd_floor(const Eigen::Matrix2d& a) {
  const Eigen::Matrix2d sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(sym);
  Eigen::Vector2d vals = eig.eigenvalues().cwiseMax(0.0);
  return eig.eigenvectors() * vals.asDiagonal() *
         eig.eigenvectors().transpose();
}

Eigen::Matrix2d sym_sqrt(const Eigen::Matrix2d& a) {
  const Eigen::Matrix2d sym = 0.5 * (a + a.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(sym);
  Eigen::Vector2d vals = eig.eigenvalues();
  const double tol = 1e-9 * std::max(1.0, sym.trace());
  if (vals(0) < -tol || vals(1) < -tol) {
    throw NumericError("covariance is not positive semidefinite");
  }
  vals = vals.cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * vals.asDiagonal() *
         eig.eigenvectors().transpose();
}

}  // namespace airdrop
