#include "airdrop/dropsim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "airdrop/errors.hpp"
#include "airdrop/linalg.hpp"

namespace airdrop {

namespace {
constexpr double kGravity = 9.81;
}

void WindField::validate() const {
  if (nx < 1 || ny < 1) throw ValidationError("wind grid must be at least 1x1");
  if (!(cell_size > 0.0)) throw ValidationError("wind cell_size must be > 0");
  if (static_cast<int>(values.size()) != nx * ny) {
    throw ValidationError("wind grid expects " + std::to_string(nx * ny) +
                          " velocity entries, got " +
                          std::to_string(values.size()));
  }
  for (const auto& v : values) {
    if (!std::isfinite(v(0)) || !std::isfinite(v(1))) {
      throw ValidationError("wind grid contains non-finite velocity");
    }
  }
  if (gust_std < 0.0 || !std::isfinite(gust_std)) {
    throw ValidationError("gust_std must be >= 0");
  }
}

void SensorBody::validate() const {
  if (!(mass > 0.0)) throw ValidationError("sensor mass must be > 0");
  if (!(surface_coefficient > 0.0)) {
    throw ValidationError("surface_coefficient must be > 0");
  }
  if (!(air_density > 0.0)) throw ValidationError("air_density must be > 0");
}

double SensorBody::terminal_speed(double gravity) const {
  return std::sqrt(2.0 * mass * gravity / (air_density * surface_coefficient));
}

Eigen::Vector2d wind_at(const WindField& field, const Eigen::Vector2d& p) {
  const double fx =
      std::clamp((p(0) - field.origin(0)) / field.cell_size, 0.0,
                 static_cast<double>(field.nx - 1));
  const double fy =
      std::clamp((p(1) - field.origin(1)) / field.cell_size, 0.0,
                 static_cast<double>(field.ny - 1));
  const int ix = std::min(static_cast<int>(fx), field.nx - 2 >= 0 ? field.nx - 2 : 0);
  const int iy = std::min(static_cast<int>(fy), field.ny - 2 >= 0 ? field.ny - 2 : 0);
  const double tx = field.nx > 1 ? fx - ix : 0.0;
  const double ty = field.ny > 1 ? fy - iy : 0.0;
  const auto at = [&](int gx, int gy) -> const Eigen::Vector2d& {
    gx = std::min(gx, field.nx - 1);
    gy = std::min(gy, field.ny - 1);
    return field.values[static_cast<std::size_t>(gy) * field.nx + gx];
  };
  return (1.0 - tx) * (1.0 - ty) * at(ix, iy) + tx * (1.0 - ty) * at(ix + 1, iy) +
         (1.0 - tx) * ty * at(ix, iy + 1) + tx * ty * at(ix + 1, iy + 1);
}

DescentResult simulate_descent(const Eigen::Vector3d& release,
                               const WindField& field, const SensorBody& body,
                               double dt, Rng* rng) {
  if (!(dt > 0.0)) throw ValidationError("descent step dt must be > 0");
  if (!(release(2) > 0.0)) {
    throw ValidationError("release altitude must be > 0");
  }
  const double drag = body.air_density * body.surface_coefficient /
                      (2.0 * body.mass);
  Eigen::Vector2d pos{release(0), release(1)};
  double z = release(2);
  double vz = 0.0;  // hover drop: zero initial velocity
  double t = 0.0;
  while (true) {
    Eigen::Vector2d v_h = wind_at(field, pos);
    if (rng != nullptr) {
      v_h(0) += field.gust_std * rng->normal();
      v_h(1) += field.gust_std * rng->normal();
    }
    const double z_next = z + vz * dt;
    const Eigen::Vector2d pos_next = pos + v_h * dt;
    if (z_next <= 0.0) {
      // Interpolate the partial step to ground contact.
      const double frac = z / (z - z_next);
      return {pos + frac * (pos_next - pos), t + frac * dt};
    }
    // Drag opposes the fall: vz <= 0 so the quadratic term brakes it.
    vz += (-kGravity + drag * vz * vz) * dt;
    pos = pos_next;
    z = z_next;
    t += dt;
  }
}

UncertainLocation estimate_landing_distribution(const Eigen::Vector3d& release,
                                                const WindField& field,
                                                const SensorBody& body,
                                                double dt, int n_samples,
                                                std::uint64_t seed) {
  if (n_samples < 2) {
    throw ValidationError("landing estimation needs at least 2 samples");
  }
  // Welford updates: exact for degenerate (gust-free) sample sets and
  // stable for large n.
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  Eigen::Matrix2d m2 = Eigen::Matrix2d::Zero();
  for (int s = 0; s < n_samples; ++s) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
    const Eigen::Vector2d p =
        simulate_descent(release, field, body, dt, &rng).landing;
    const Eigen::Vector2d d_old = p - mean;
    mean += d_old / static_cast<double>(s + 1);
    const Eigen::Vector2d d_new = p - mean;
    m2 += d_old * d_new.transpose();
  }
  UncertainLocation out;
  out.mean = mean;
  out.covariance = psd_floor(m2 / static_cast<double>(n_samples - 1));
  return out;
}

Eigen::Vector2d sample_landing(const UncertainLocation& dist, Rng& rng) {
  const Eigen::Matrix2d root = sym_sqrt(dist.covariance);
  const Eigen::Vector2d z{rng.normal(), rng.normal()};
  return dist.mean + root * z;
}

}  // namespace airdrop
