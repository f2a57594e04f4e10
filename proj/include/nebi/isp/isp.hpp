#pragma once

#include <array>

#include "nebi/core/image.hpp"

namespace nebi::isp {

using Mat3 = std::array<std::array<float, 3>, 3>;

Mat3 mat3_identity();
// Inverts with a |det| > 1e-6 guard; throws std::invalid_argument otherwise.
Mat3 mat3_invert(const Mat3& m);
// Row-normalized, diagonally dominant example CCM used by default configs
// so the inverse-CCM path is exercised outside of tests.
Mat3 example_ccm();

// Invertible camera model: 3x3 color correction (rows sum to 1), per-channel
// white-balance gains, pinhole intrinsics for homography synthesis, and a
// fixed piecewise sRGB transfer curve.
struct CameraModel {
  Mat3 ccm = mat3_identity();
  std::array<float, 3> wb_gains = {1.0f, 1.0f, 1.0f};  // r, g, b in [0.25, 8]
  float fx = 500.0f;
  float fy = 500.0f;
  float cx = 0.0f;
  float cy = 0.0f;

  void validate() const;  // throws std::invalid_argument on violated bounds

  // Same model with the principal point moved to the center of a W x H image.
  CameraModel centered_on(int width, int height) const;
};

// Exact piecewise sRGB transfer functions (EOTF / OETF).
float srgb_to_linear(float v);
float linear_to_srgb(float v);

// sRGB -> linear raw: inverse gamma, inverse gain, inverse CCM, in that
// order. No clamping; outputs may leave [0, 1].
core::PlanarImage unprocess(const core::PlanarImage& img,
                            const CameraModel& cam);

// Linear raw -> sRGB: CCM, gain, clamp to [0, 1], gamma. The clamp is the
// only clipping stage in the pair.
core::PlanarImage forward_isp(const core::PlanarImage& img,
                              const CameraModel& cam);

// RGGB subsampling of a 3-channel linear image with even dims.
core::PackedRaw mosaic(const core::PlanarImage& img);

// Bilinear reconstruction of the missing Bayer samples. Borders use
// parity-preserving mirror indexing.
core::PlanarImage demosaic_bilinear(const core::PackedRaw& raw);

}  // namespace nebi::isp
