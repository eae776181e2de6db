#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

namespace airdrop {

/// Squared-exponential kernel hyperparameters. The length scales enter the
/// kernel through W = diag(l_x^2, l_y^2), so the kernel at zero input
/// uncertainty reduces to sigma^2 exp(-1/2 d^T W^-1 d).
struct KernelParams {
  double signal_variance = 1.0;       // sigma^2, field units squared
  Eigen::Vector2d length_scales{1.0, 1.0};  // meters, per input dimension

  Eigen::Matrix2d w() const {
    return length_scales.cwiseProduct(length_scales).asDiagonal();
  }
  void validate() const;
};

struct NoiseParams {
  double measurement_variance = 0.0;  // sigma_eps^2
  double jitter = 0.0;                // added to Gram diagonals

  void validate(const KernelParams& kernel) const;
};

/// Gaussian belief over a ground position: landing point of one sensor.
struct UncertainLocation {
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  Eigen::Matrix2d covariance = Eigen::Matrix2d::Zero();

  void validate() const;
};

/// Covariance blocks of the joint Gaussian over PoI values (U) and sensor
/// readings (Q). The stacked joint is [[uu, uq], [uq^T, qq]].
struct CovTriple {
  Eigen::MatrixXd sigma_uu;
  Eigen::MatrixXd sigma_qq;
  Eigen::MatrixXd sigma_uq;

  Eigen::MatrixXd joint() const;
};

/// sigma^2 exp(-1/2 sum_d (p_d - q_d)^2 / l_d^2). Throws ValidationError on
/// non-finite inputs.
double se_kernel(const Eigen::Vector2d& p, const Eigen::Vector2d& q,
                 const KernelParams& kernel);

/// Expected SE covariance between two Gaussian-distributed locations:
///   sigma^2 exp(-1/2 d^T (W + Sa + Sb)^-1 d) / det(I + W^-1 (Sa+Sb))^(1/2)
/// with d = mean_a - mean_b. The determinant factor is dropped when
/// `same_point` is set (the diagonal case), which makes the result exactly
/// sigma^2 there.
double expected_cov_entry(const UncertainLocation& a,
                          const UncertainLocation& b, bool same_point,
                          const KernelParams& kernel);

/// Builds the covariance blocks for PoIs (exact locations) and drops
/// (uncertain locations). Measurement noise and jitter go on the sigma_qq
/// diagonal; sigma_uu gets jitter only. PoIs enter sigma_uq with a zero
/// location covariance.
CovTriple assemble_covariances(std::span<const Eigen::Vector2d> pois,
                               std::span<const UncertainLocation> drops,
                               const KernelParams& kernel,
                               const NoiseParams& noise);

/// Differential entropy of a Gaussian with the given covariance, in nats.
/// Log-determinant goes through Cholesky; throws NotPositiveDefinite naming
/// the offending leading minor if the factorization fails after jitter.
double gaussian_entropy(const Eigen::MatrixXd& cov);

/// Mutual information between PoI values and sensor readings at uncertain
/// locations, in nats:
///   MI = 1/2 log( det(sigma_uu) det(sigma_qq) / det(joint) ).
/// Empty drops give exactly 0. Values in [-1e-9, 0) clamp to 0; anything
/// more negative is a numeric error.
double mutual_information(std::span<const Eigen::Vector2d> pois,
                          std::span<const UncertainLocation> drops,
                          const KernelParams& kernel,
                          const NoiseParams& noise);

struct GpPosterior {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
};

/// Standard GP regression at known inputs: used by the evaluation pipeline
/// once landings are realized. With no training points returns the prior.
GpPosterior gp_posterior(std::span<const Eigen::Vector2d> train_points,
                         const Eigen::VectorXd& observations,
                         const NoiseParams& noise, const KernelParams& kernel,
                         std::span<const Eigen::Vector2d> queries);

}  // namespace airdrop
