#include "airdrop/gp.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "airdrop/errors.hpp"
#include "airdrop/linalg.hpp"

namespace airdrop {

namespace {

bool finite(const Eigen::Vector2d& v) {
  return std::isfinite(v(0)) && std::isfinite(v(1));
}

bool finite(const Eigen::Matrix2d& m) {
  return m.allFinite();
}

}  // namespace

void KernelParams::validate() const {
  if (!(signal_variance > 0.0) || !std::isfinite(signal_variance)) {
    throw ValidationError("kernel.signal_variance must be positive");
  }
  for (int d = 0; d < 2; ++d) {
    if (!(length_scales(d) > 0.0) || !std::isfinite(length_scales(d))) {
      throw ValidationError("kernel.length_scales[" + std::to_string(d) +
                            "] must be positive");
    }
  }
}

void NoiseParams::validate(const KernelParams& kernel) const {
  if (measurement_variance < 0.0 || !std::isfinite(measurement_variance)) {
    throw ValidationError("noise.measurement_variance must be >= 0");
  }
  if (jitter < 0.0 || jitter > 1e-6 * kernel.signal_variance) {
    throw ValidationError(
        "noise.jitter must be in [0, 1e-6 * signal_variance]");
  }
}

void UncertainLocation::validate() const {
  if (!finite(mean) || !finite(covariance)) {
    throw ValidationError("uncertain location has non-finite entries");
  }
  if (std::abs(covariance(0, 1) - covariance(1, 0)) > 1e-12) {
    throw ValidationError("location covariance is not symmetric");
  }
  // 2x2 symmetric PSD check: nonnegative diagonal and determinant.
  const double tr = covariance(0, 0) + covariance(1, 1);
  const double det = covariance(0, 0) * covariance(1, 1) -
                     covariance(0, 1) * covariance(1, 0);
  const double tol = 1e-12 * std::max(1.0, tr);
  if (covariance(0, 0) < -tol || covariance(1, 1) < -tol || det < -tol) {
    throw ValidationError("location covariance is not PSD");
  }
}

Eigen::MatrixXd CovTriple::joint() const {
  const Eigen::Index nu = sigma_uu.rows();
  const Eigen::Index nq = sigma_qq.rows();
  Eigen::MatrixXd j(nu + nq, nu + nq);
  j.topLeftCorner(nu, nu) = sigma_uu;
  j.topRightCorner(nu, nq) = sigma_uq;
  j.bottomLeftCorner(nq, nu) = sigma_uq.transpose();
  j.bottomRightCorner(nq, nq) = sigma_qq;
  return j;
}

double se_kernel(const Eigen::Vector2d& p, const Eigen::Vector2d& q,
                 const KernelParams& kernel) {
  if (!finite(p) || !finite(q)) {
    throw ValidationError("se_kernel: non-finite input point");
  }
  const Eigen::Vector2d d = p - q;
  double quad = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double l = kernel.length_scales(i);
    quad += (d(i) / l) * (d(i) / l);
  }
  return kernel.signal_variance * std::exp(-0.5 * quad);
}

double expected_cov_entry(const UncertainLocation& a,
                          const UncertainLocation& b, bool same_point,
                          const KernelParams& kernel) {
  const Eigen::Matrix2d w = kernel.w();
  const Eigen::Matrix2d sum_cov = a.covariance + b.covariance;
  const Eigen::Matrix2d m = w + sum_cov;
  const double det_m = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (!(det_m > 0.0) || !std::isfinite(det_m)) {
    throw NumericError("expected_cov_entry: W + Sa + Sb is singular");
  }
  const Eigen::Vector2d d = a.mean - b.mean;
  // Closed-form 2x2 solve of (W + Sa + Sb)^-1 d.
  const Eigen::Vector2d sol{(m(1, 1) * d(0) - m(0, 1) * d(1)) / det_m,
                            (m(0, 0) * d(1) - m(1, 0) * d(0)) / det_m};
  const double quad = d.dot(sol);
  const double numerator = kernel.signal_variance * std::exp(-0.5 * quad);
  if (same_point) return numerator;
  // det(I + W^-1 S) with diagonal W.
  const double w0 = w(0, 0);
  const double w1 = w(1, 1);
  const double det_denom =
      (1.0 + sum_cov(0, 0) / w0) * (1.0 + sum_cov(1, 1) / w1) -
      (sum_cov(0, 1) / w0) * (sum_cov(1, 0) / w1);
  if (!(det_denom > 0.0) || !std::isfinite(det_denom)) {
    throw NumericError("expected_cov_entry: invalid uncertainty determinant");
  }
  return numerator / std::sqrt(det_denom);
}

CovTriple assemble_covariances(std::span<const Eigen::Vector2d> pois,
                               std::span<const UncertainLocation> drops,
                               const KernelParams& kernel,
                               const NoiseParams& noise) {
  if (pois.empty()) {
    throw ValidationError("assemble_covariances: at least one PoI required");
  }
  const Eigen::Index nu = static_cast<Eigen::Index>(pois.size());
  const Eigen::Index nq = static_cast<Eigen::Index>(drops.size());
  CovTriple out;
  out.sigma_uu.resize(nu, nu);
  for (Eigen::Index i = 0; i < nu; ++i) {
    for (Eigen::Index j = i; j < nu; ++j) {
      const double v = se_kernel(pois[i], pois[j], kernel);
      out.sigma_uu(i, j) = v;
      out.sigma_uu(j, i) = v;
    }
    out.sigma_uu(i, i) += noise.jitter;
  }
  out.sigma_qq.resize(nq, nq);
  for (Eigen::Index i = 0; i < nq; ++i) {
    for (Eigen::Index j = i; j < nq; ++j) {
      const double v = expected_cov_entry(drops[i], drops[j], i == j, kernel);
      out.sigma_qq(i, j) = v;
      out.sigma_qq(j, i) = v;
    }
    out.sigma_qq(i, i) += noise.measurement_variance + noise.jitter;
  }
  out.sigma_uq.resize(nu, nq);
  for (Eigen::Index i = 0; i < nu; ++i) {
    UncertainLocation poi;  // exact location: zero covariance
    poi.mean = pois[i];
    for (Eigen::Index j = 0; j < nq; ++j) {
      out.sigma_uq(i, j) = expected_cov_entry(poi, drops[j], false, kernel);
    }
  }
  return out;
}

double gaussian_entropy(const Eigen::MatrixXd& cov) {
  const double dim = static_cast<double>(cov.rows());
  const double scale = cov.rows() > 0 ? cov.trace() / dim : 1.0;
  const double logdet = spd_log_det(cov, scale);
  constexpr double log_2pi_e = 2.837877066409345483560659472811;  // log(2*pi*e)
  return 0.5 * (dim * log_2pi_e + logdet);
}

double mutual_information(std::span<const Eigen::Vector2d> pois,
                          std::span<const UncertainLocation> drops,
                          const KernelParams& kernel,
                          const NoiseParams& noise) {
  if (drops.empty()) return 0.0;
  const CovTriple cov = assemble_covariances(pois, drops, kernel, noise);
  const double scale = kernel.signal_variance;
  const double ld_uu = spd_log_det(cov.sigma_uu, scale);
  const double ld_qq = spd_log_det(cov.sigma_qq, scale);
  const double ld_joint = spd_log_det(cov.joint(), scale);
  double mi = 0.5 * (ld_uu + ld_qq - ld_joint);
  if (mi < 0.0) {
    if (mi < -1e-9) {
      throw NumericError("mutual information " + std::to_string(mi) +
                         " is below the negativity tolerance");
    }
    mi = 0.0;
  }
  return mi;
}

GpPosterior gp_posterior(std::span<const Eigen::Vector2d> train_points,
                         const Eigen::VectorXd& observations,
                         const NoiseParams& noise, const KernelParams& kernel,
                         std::span<const Eigen::Vector2d> queries) {
  const Eigen::Index n = static_cast<Eigen::Index>(train_points.size());
  const Eigen::Index m = static_cast<Eigen::Index>(queries.size());
  if (observations.size() != n) {
    throw ValidationError("gp_posterior: |train_points| != |observations|");
  }
  Eigen::MatrixXd k_ss(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i; j < m; ++j) {
      const double v = se_kernel(queries[i], queries[j], kernel);
      k_ss(i, j) = v;
      k_ss(j, i) = v;
    }
  }
  if (n == 0) {
    return {Eigen::VectorXd::Zero(m), k_ss};
  }
  Eigen::MatrixXd k_xx(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double v = se_kernel(train_points[i], train_points[j], kernel);
      k_xx(i, j) = v;
      k_xx(j, i) = v;
    }
    k_xx(i, i) += noise.measurement_variance + noise.jitter;
  }
  Eigen::MatrixXd k_sx(m, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      k_sx(i, j) = se_kernel(queries[i], train_points[j], kernel);
    }
  }
  Eigen::MatrixXd lower;
  int bad = -1;
  if (!cholesky_lower(k_xx, lower, bad)) {
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
    bool ok = false;
    for (double level : {1e-9, 1e-6}) {
      if (cholesky_lower(k_xx + level * kernel.signal_variance * eye, lower,
                         bad)) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw NotPositiveDefinite(
          "gp_posterior: training Gram matrix not positive definite "
          "(leading minor " + std::to_string(bad) + ")",
          bad);
    }
  }
  GpPosterior post;
  post.mean = k_sx * cholesky_solve(lower, observations);
  post.cov = k_ss - k_sx * cholesky_solve(lower, Eigen::MatrixXd(k_sx.transpose()));
  return post;
}

}  // namespace airdrop
