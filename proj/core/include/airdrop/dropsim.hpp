#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "airdrop/gp.hpp"
#include "airdrop/rng.hpp"

namespace airdrop {

/// Planar wind velocities on a regular lattice, queried with bilinear
/// interpolation (clamped at the boundary). `gust_std` is the standard
/// deviation of the isotropic per-step velocity perturbation used by the
/// stochastic descent model.
struct WindField {
  Eigen::Vector2d origin = Eigen::Vector2d::Zero();
  double cell_size = 1.0;
  int nx = 0;
  int ny = 0;
  std::vector<Eigen::Vector2d> values;  // row-major: values[iy * nx + ix]
  double gust_std = 0.0;

  void validate() const;
};

/// Falling body parameters of the descent model.
struct SensorBody {
  double mass = 10.0;                 // kg
  double surface_coefficient = 1.0;   // dimensionless drag-area coefficient
  double air_density = 1.225;         // kg/m^3

  void validate() const;
  /// Steady-state fall speed sqrt(2 m g / (rho kappa)).
  double terminal_speed(double gravity = 9.81) const;
};

Eigen::Vector2d wind_at(const WindField& field, const Eigen::Vector2d& p);

struct DescentResult {
  Eigen::Vector2d landing = Eigen::Vector2d::Zero();
  double fall_time = 0.0;  // seconds
};

/// Explicit-Euler descent from `release` until ground contact. Vertical
/// speed obeys dv/dt = -g + (rho kappa / 2m) v^2; horizontal position
/// advances at the local wind velocity, plus a gust draw per step when an
/// rng is supplied. The last partial step interpolates linearly to z = 0.
DescentResult simulate_descent(const Eigen::Vector3d& release,
                               const WindField& field, const SensorBody& body,
                               double dt, Rng* rng = nullptr);

/// Moment-matched landing distribution from `n_samples` gust-perturbed
/// descents with counter-derived per-sample seeds. The sample covariance is
/// unbiased (divisor n-1), symmetrized and floored to PSD.
UncertainLocation estimate_landing_distribution(const Eigen::Vector3d& release,
                                                const WindField& field,
                                                const SensorBody& body,
                                                double dt, int n_samples,
                                                std::uint64_t seed);

/// Draw from N(mean, covariance) via the symmetric square root.
Eigen::Vector2d sample_landing(const UncertainLocation& dist, Rng& rng);

}  // namespace airdrop
