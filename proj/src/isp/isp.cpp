#include "nebi/isp/isp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nebi::isp {

namespace {

void require_rgb(const core::PlanarImage& img, const char* op) {
  if (img.channels != 3)
    throw std::invalid_argument(std::string(op) + ": expected 3 channels, got " +
                                std::to_string(img.channels));
}

// Mirror index that keeps Bayer parity: -1 -> 1, n -> n-2.
int mirror(int i, int n) {
  if (i < 0) i = -i;
  if (i >= n) i = 2 * n - 2 - i;
  return i;
}

}  // namespace

Mat3 mat3_identity() {
  return {{{1.0f, 0.0f, 0.0f}, {0.0f, 1.0f, 0.0f}, {0.0f, 0.0f, 1.0f}}};
}

Mat3 example_ccm() {
  return {{{0.80f, 0.15f, 0.05f}, {0.10f, 0.75f, 0.15f}, {0.05f, 0.10f, 0.85f}}};
}

Mat3 mat3_invert(const Mat3& m) {
  // Cofactor inverse in double to keep round-trips tight.
  double a[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = m[i][j];

  const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                     a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                     a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  if (std::abs(det) <= 1e-6)
    throw std::invalid_argument("mat3_invert: matrix is singular");

  Mat3 inv;
  inv[0][0] = static_cast<float>((a[1][1] * a[2][2] - a[1][2] * a[2][1]) / det);
  inv[0][1] = static_cast<float>((a[0][2] * a[2][1] - a[0][1] * a[2][2]) / det);
  inv[0][2] = static_cast<float>((a[0][1] * a[1][2] - a[0][2] * a[1][1]) / det);
  inv[1][0] = static_cast<float>((a[1][2] * a[2][0] - a[1][0] * a[2][2]) / det);
  inv[1][1] = static_cast<float>((a[0][0] * a[2][2] - a[0][2] * a[2][0]) / det);
  inv[1][2] = static_cast<float>((a[0][2] * a[1][0] - a[0][0] * a[1][2]) / det);
  inv[2][0] = static_cast<float>((a[1][0] * a[2][1] - a[1][1] * a[2][0]) / det);
  inv[2][1] = static_cast<float>((a[0][1] * a[2][0] - a[0][0] * a[2][1]) / det);
  inv[2][2] = static_cast<float>((a[0][0] * a[1][1] - a[0][1] * a[1][0]) / det);
  return inv;
}

void CameraModel::validate() const {
  mat3_invert(ccm);  // throws if singular
  for (float g : wb_gains)
    if (!(g >= 0.25f && g <= 8.0f))
      throw std::invalid_argument("CameraModel: wb gain outside [0.25, 8]");
  if (!(fx > 0.0f) || !(fy > 0.0f))
    throw std::invalid_argument("CameraModel: focal lengths must be positive");
}

CameraModel CameraModel::centered_on(int width, int height) const {
  CameraModel out = *this;
  out.cx = 0.5f * static_cast<float>(width - 1);
  out.cy = 0.5f * static_cast<float>(height - 1);
  return out;
}

float srgb_to_linear(float v) {
  if (v <= 0.04045f) return v / 12.92f;
  return std::pow((v + 0.055f) / 1.055f, 2.4f);
}

float linear_to_srgb(float v) {
  if (v <= 0.0031308f) return v * 12.92f;
  return 1.055f * std::pow(v, 1.0f / 2.4f) - 0.055f;
}

core::PlanarImage unprocess(const core::PlanarImage& img,
                            const CameraModel& cam) {
  require_rgb(img, "unprocess");
  const Mat3 inv_ccm = mat3_invert(cam.ccm);

  core::PlanarImage out(3, img.height, img.width, core::ColorSpace::LinearRaw);
  const std::size_t plane = img.pixel_count();
  for (std::size_t i = 0; i < plane; ++i) {
    float v[3];
    for (int c = 0; c < 3; ++c)
      v[c] = srgb_to_linear(img.data[c * plane + i]) / cam.wb_gains[c];
    for (int c = 0; c < 3; ++c)
      out.data[c * plane + i] =
          inv_ccm[c][0] * v[0] + inv_ccm[c][1] * v[1] + inv_ccm[c][2] * v[2];
  }
  return out;
}

core::PlanarImage forward_isp(const core::PlanarImage& img,
                              const CameraModel& cam) {
  require_rgb(img, "forward_isp");

  core::PlanarImage out(3, img.height, img.width, core::ColorSpace::SRGB);
  const std::size_t plane = img.pixel_count();
  for (std::size_t i = 0; i < plane; ++i) {
    float v[3];
    for (int c = 0; c < 3; ++c) {
      const float mixed = cam.ccm[c][0] * img.data[0 * plane + i] +
                          cam.ccm[c][1] * img.data[1 * plane + i] +
                          cam.ccm[c][2] * img.data[2 * plane + i];
      v[c] = mixed * cam.wb_gains[c];
    }
    for (int c = 0; c < 3; ++c)
      out.data[c * plane + i] = linear_to_srgb(std::clamp(v[c], 0.0f, 1.0f));
  }
  return out;
}

core::PackedRaw mosaic(const core::PlanarImage& img) {
  require_rgb(img, "mosaic");
  if (img.height % 2 != 0 || img.width % 2 != 0)
    throw std::invalid_argument("mosaic: dims must be even");

  core::PackedRaw out(img.height / 2, img.width / 2);
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      out.at(0, y, x) = img.at(0, 2 * y, 2 * x);
      out.at(1, y, x) = img.at(1, 2 * y, 2 * x + 1);
      out.at(2, y, x) = img.at(1, 2 * y + 1, 2 * x);
      out.at(3, y, x) = img.at(2, 2 * y + 1, 2 * x + 1);
    }
  }
  return out;
}

core::PlanarImage demosaic_bilinear(const core::PackedRaw& raw) {
  const int h = raw.height * 2;
  const int w = raw.width * 2;

  // Rebuild the flat Bayer plane; site color from (y%2, x%2).
  std::vector<float> bayer(static_cast<std::size_t>(h) * w);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const int plane = (y % 2) * 2 + (x % 2);
      bayer[static_cast<std::size_t>(y) * w + x] = raw.at(plane, y / 2, x / 2);
    }
  auto b = [&](int y, int x) {
    return bayer[static_cast<std::size_t>(mirror(y, h)) * w + mirror(x, w)];
  };

  core::PlanarImage out(3, h, w, core::ColorSpace::LinearRaw);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const bool even_row = (y % 2) == 0;
      const bool even_col = (x % 2) == 0;
      float r, g, bl;
      if (even_row && even_col) {  // R site
        r = b(y, x);
        g = 0.25f * (b(y - 1, x) + b(y + 1, x) + b(y, x - 1) + b(y, x + 1));
        bl = 0.25f * (b(y - 1, x - 1) + b(y - 1, x + 1) + b(y + 1, x - 1) +
                      b(y + 1, x + 1));
      } else if (even_row) {  // G site on an R row
        r = 0.5f * (b(y, x - 1) + b(y, x + 1));
        g = b(y, x);
        bl = 0.5f * (b(y - 1, x) + b(y + 1, x));
      } else if (even_col) {  // G site on a B row
        r = 0.5f * (b(y - 1, x) + b(y + 1, x));
        g = b(y, x);
        bl = 0.5f * (b(y, x - 1) + b(y, x + 1));
      } else {  // B site
        r = 0.25f * (b(y - 1, x - 1) + b(y - 1, x + 1) + b(y + 1, x - 1) +
                     b(y + 1, x + 1));
        g = 0.25f * (b(y - 1, x) + b(y + 1, x) + b(y, x - 1) + b(y, x + 1));
        bl = b(y, x);
      }
      out.at(0, y, x) = r;
      out.at(1, y, x) = g;
      out.at(2, y, x) = bl;
    }
  }
  return out;
}

}  // namespace nebi::isp
