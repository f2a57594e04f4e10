#include "nebi/degrade/homography.hpp"

#include <cmath>
#include <stdexcept>

namespace nebi::degrade {

namespace {

using Mat3d = std::array<std::array<double, 3>, 3>;

Mat3d matmul(const Mat3d& a, const Mat3d& b) {
  Mat3d out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      out[i][j] = s;
    }
  return out;
}

Mat3d rodrigues(const std::array<double, 3>& axis_angle) {
  const double theta =
      std::sqrt(axis_angle[0] * axis_angle[0] + axis_angle[1] * axis_angle[1] +
                axis_angle[2] * axis_angle[2]);
  Mat3d r{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  if (theta < 1e-14) return r;
  const double kx = axis_angle[0] / theta;
  const double ky = axis_angle[1] / theta;
  const double kz = axis_angle[2] / theta;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double t = 1.0 - c;
  r[0][0] = c + kx * kx * t;
  r[0][1] = kx * ky * t - kz * s;
  r[0][2] = kx * kz * t + ky * s;
  r[1][0] = ky * kx * t + kz * s;
  r[1][1] = c + ky * ky * t;
  r[1][2] = ky * kz * t - kx * s;
  r[2][0] = kz * kx * t - ky * s;
  r[2][1] = kz * ky * t + kx * s;
  r[2][2] = c + kz * kz * t;
  return r;
}

// Exact integral of the piecewise-linear trace over [a, b].
std::array<double, 3> integrate_omega(const GyroTrace& trace, double a,
                                      double b) {
  std::array<double, 3> acc{0.0, 0.0, 0.0};
  if (b <= a) return acc;
  const double dt = 1.0 / trace.rate_hz;
  double t = a;
  while (t < b) {
    const double next_knot = (std::floor(t / dt + 1e-9) + 1.0) * dt;
    const double t2 = std::min(b, next_knot);
    const auto w1 = trace.omega_at(t);
    const auto w2 = trace.omega_at(t2);
    for (int i = 0; i < 3; ++i) acc[i] += 0.5 * (w1[i] + w2[i]) * (t2 - t);
    t = t2;
  }
  return acc;
}

}  // namespace

Homography Homography::identity() {
  return Homography{{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
}

Homography Homography::normalized() const {
  const double pivot = h[2][2];
  if (std::abs(pivot) < 1e-12)
    throw std::invalid_argument("Homography: cannot normalize, h[2][2] ~ 0");
  Homography out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.h[i][j] = h[i][j] / pivot;
  return out;
}

Homography Homography::inverse() const {
  const auto& a = h;
  const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                     a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                     a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  if (std::abs(det) < 1e-12)
    throw std::invalid_argument("Homography: singular, cannot invert");
  Homography inv;
  inv.h[0][0] = (a[1][1] * a[2][2] - a[1][2] * a[2][1]) / det;
  inv.h[0][1] = (a[0][2] * a[2][1] - a[0][1] * a[2][2]) / det;
  inv.h[0][2] = (a[0][1] * a[1][2] - a[0][2] * a[1][1]) / det;
  inv.h[1][0] = (a[1][2] * a[2][0] - a[1][0] * a[2][2]) / det;
  inv.h[1][1] = (a[0][0] * a[2][2] - a[0][2] * a[2][0]) / det;
  inv.h[1][2] = (a[0][2] * a[1][0] - a[0][0] * a[1][2]) / det;
  inv.h[2][0] = (a[1][0] * a[2][1] - a[1][1] * a[2][0]) / det;
  inv.h[2][1] = (a[0][1] * a[2][0] - a[0][0] * a[2][1]) / det;
  inv.h[2][2] = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) / det;
  return inv.normalized();
}

Homography Homography::compose(const Homography& rhs) const {
  return Homography{matmul(h, rhs.h)}.normalized();
}

std::array<double, 2> Homography::apply(double x, double y) const {
  const double w = h[2][0] * x + h[2][1] * y + h[2][2];
  if (std::abs(w) < 1e-12)
    throw std::invalid_argument("Homography: point maps to infinity");
  return {(h[0][0] * x + h[0][1] * y + h[0][2]) / w,
          (h[1][0] * x + h[1][1] * y + h[1][2]) / w};
}

std::vector<Homography> trace_to_homographies(const GyroTrace& trace,
                                              double t0, double t1, int m,
                                              const isp::CameraModel& cam) {
  if (m < 1) throw std::invalid_argument("trace_to_homographies: m >= 1");
  if (t0 < -1e-9 || t1 > trace.duration() + 1e-9 || t1 < t0)
    throw std::invalid_argument(
        "trace_to_homographies: interval outside trace span");

  const Mat3d k{{{cam.fx, 0.0, cam.cx}, {0.0, cam.fy, cam.cy}, {0.0, 0.0, 1.0}}};
  const Mat3d k_inv{{{1.0 / cam.fx, 0.0, -cam.cx / cam.fx},
                     {0.0, 1.0 / cam.fy, -cam.cy / cam.fy},
                     {0.0, 0.0, 1.0}}};

  std::vector<Homography> out;
  out.reserve(m);
  Mat3d r{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  double prev_tau = t0;
  for (int j = 0; j < m; ++j) {
    const double tau =
        m == 1 ? t0 : t0 + (t1 - t0) * static_cast<double>(j) / (m - 1);
    r = matmul(r, rodrigues(integrate_omega(trace, prev_tau, tau)));
    prev_tau = tau;
    out.push_back(Homography{matmul(matmul(k, r), k_inv)}.normalized());
  }
  return out;
}

}  // namespace nebi::degrade
