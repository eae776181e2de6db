#pragma once

#include <Eigen/Core>

namespace airdrop {

/// Lower-triangular Cholesky factor of a symmetric matrix. Returns false and
/// sets `bad_minor` to the zero-based index of the first non-positive pivot
/// when the matrix is not positive definite.
bool cholesky_lower(const Eigen::MatrixXd& a, Eigen::MatrixXd& lower,
                    int& bad_minor);

/// log det(A) from its Cholesky factor, summed with compensation.
double log_det_from_cholesky(const Eigen::MatrixXd& lower);

/// log det of a symmetric positive definite matrix. On factorization failure
/// retries with jitter 1e-9 * scale on the diagonal, then 1e-6 * scale;
/// a third failure throws NotPositiveDefinite.
double spd_log_det(const Eigen::MatrixXd& a, double scale);

/// Solves A x = b given the lower Cholesky factor of A.
Eigen::VectorXd cholesky_solve(const Eigen::MatrixXd& lower,
                               const Eigen::VectorXd& b);
Eigen::MatrixXd cholesky_solve(const Eigen::MatrixXd& lower,
                               const Eigen::MatrixXd& b);

/// Symmetrizes and clamps negative eigenvalues to zero.
Eigen::Matrix2d psd_floor(const Eigen::Matrix2d& a);

/// Symmetric square root of a PSD 2x2 matrix. Throws NumericError if an
/// eigenvalue is below -1e-9 * trace.
Eigen::Matrix2d sym_sqrt(const Eigen::Matrix2d& a);

}  // namespace airdrop
