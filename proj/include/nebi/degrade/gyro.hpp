#pragma once

#include <array>
#include <vector>

#include "nebi/core/rng.hpp"

namespace nebi::degrade {

// Uniformly sampled angular-velocity trace; sample k is at t = k / rate_hz.
struct GyroTrace {
  double rate_hz = 0.0;
  std::vector<std::array<float, 3>> omega;  // rad/s per axis

  double time_at(std::size_t k) const { return static_cast<double>(k) / rate_hz; }
  double duration() const {
    return omega.empty() ? 0.0 : time_at(omega.size() - 1);
  }
  // Piecewise-linear interpolation, clamped to the trace span.
  std::array<double, 3> omega_at(double t) const;
};

// Mean-reverting (Ornstein-Uhlenbeck) angular-velocity model:
//   w_{k+1} = w_k (1 - theta dt) + sigma sqrt(dt) eps.
// The trace starts from a stationary draw, so short traces already have the
// stationary per-axis std sigma / sqrt(2 theta).
struct GyroSimParams {
  float theta = 0.5f;  // mean-reversion rate, 1/s
  float sigma = 0.1f;  // excitation, rad/(s sqrt(s))
};

GyroTrace simulate_gyro(double duration_s, double rate_hz, core::Rng& rng,
                        const GyroSimParams& params);

}  // namespace nebi::degrade
