#include "nebi/degrade/gyro.hpp"

#include <cmath>
#include <stdexcept>

namespace nebi::degrade {

std::array<double, 3> GyroTrace::omega_at(double t) const {
  if (omega.empty()) return {0.0, 0.0, 0.0};
  const double pos = t * rate_hz;
  const auto last = static_cast<double>(omega.size() - 1);
  if (pos <= 0.0) return {omega.front()[0], omega.front()[1], omega.front()[2]};
  if (pos >= last) return {omega.back()[0], omega.back()[1], omega.back()[2]};
  const auto k = static_cast<std::size_t>(pos);
  const double f = pos - static_cast<double>(k);
  std::array<double, 3> out;
  for (int a = 0; a < 3; ++a)
    out[a] = (1.0 - f) * omega[k][a] + f * omega[k + 1][a];
  return out;
}

GyroTrace simulate_gyro(double duration_s, double rate_hz, core::Rng& rng,
                        const GyroSimParams& params) {
  if (!(duration_s > 0.0))
    throw std::invalid_argument("simulate_gyro: duration must be positive");
  if (!(rate_hz >= 200.0))
    throw std::invalid_argument("simulate_gyro: rate must be >= 200 Hz");

  const double dt = 1.0 / rate_hz;
  const auto steps = static_cast<std::size_t>(std::ceil(duration_s * rate_hz));

  GyroTrace trace;
  trace.rate_hz = rate_hz;
  trace.omega.resize(steps + 1);

  const double stationary_std =
      params.theta > 0.0f
          ? params.sigma / std::sqrt(2.0 * static_cast<double>(params.theta))
          : 0.0;
  for (int a = 0; a < 3; ++a)
    trace.omega[0][a] = static_cast<float>(stationary_std * rng.gaussian());

  const double decay = 1.0 - static_cast<double>(params.theta) * dt;
  const double kick = static_cast<double>(params.sigma) * std::sqrt(dt);
  for (std::size_t k = 0; k < steps; ++k)
    for (int a = 0; a < 3; ++a)
      trace.omega[k + 1][a] = static_cast<float>(
          trace.omega[k][a] * decay + kick * rng.gaussian());
  return trace;
}

}  // namespace nebi::degrade
