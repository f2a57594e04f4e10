#pragma once

#include <array>
#include <vector>

#include "nebi/degrade/gyro.hpp"
#include "nebi/isp/isp.hpp"

namespace nebi::degrade {

// 3x3 projective map, normalized so h[2][2] == 1.
struct Homography {
  std::array<std::array<double, 3>, 3> h;

  static Homography identity();
  Homography normalized() const;    // throws if h[2][2] ~ 0
  Homography inverse() const;       // throws if singular
  Homography compose(const Homography& rhs) const;  // this * rhs
  // Maps pixel (x, y); throws on vanishing homogeneous coordinate.
  std::array<double, 2> apply(double x, double y) const;
};

// Rotation-only camera homographies H_j = K R_j K^-1 at m uniformly spaced
// times in [t0, t1] (inclusive; m == 1 degenerates to tau = t0, identity).
// R_j integrates the piecewise-linear trace from t0 with incremental
// axis-angle steps between consecutive sample times.
std::vector<Homography> trace_to_homographies(const GyroTrace& trace,
                                              double t0, double t1, int m,
                                              const isp::CameraModel& cam);

}  // namespace nebi::degrade
