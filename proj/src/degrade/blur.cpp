#include "nebi/degrade/blur.hpp"

#include <cmath>
#include <stdexcept>

namespace nebi::degrade {

namespace {

// Fold a continuous coordinate into [0, n-1] by mirror reflection.
double fold(double x, int n) {
  const double hi = static_cast<double>(n - 1);
  while (x < 0.0 || x > hi) {
    if (x < 0.0) x = -x;
    if (x > hi) x = 2.0 * hi - x;
  }
  return x;
}

bool is_identity(const Homography& h) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (h.h[i][j] != (i == j ? 1.0 : 0.0)) return false;
  return true;
}

}  // namespace

core::PlanarImage warp(const core::PlanarImage& img, const Homography& h) {
  if (is_identity(h)) return img;
  const Homography inv = h.inverse();

  core::PlanarImage out(img.channels, img.height, img.width, img.space);
  const std::size_t plane = img.pixel_count();
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const auto src = inv.apply(static_cast<double>(x), static_cast<double>(y));
      const double sx = fold(src[0], img.width);
      const double sy = fold(src[1], img.height);
      const int x0 = static_cast<int>(sx);
      const int y0 = static_cast<int>(sy);
      const int x1 = std::min(x0 + 1, img.width - 1);
      const int y1 = std::min(y0 + 1, img.height - 1);
      const float fx = static_cast<float>(sx - x0);
      const float fy = static_cast<float>(sy - y0);
      for (int c = 0; c < img.channels; ++c) {
        const float* p = img.data.data() + c * plane;
        const float top = p[static_cast<std::size_t>(y0) * img.width + x0] * (1.0f - fx) +
                          p[static_cast<std::size_t>(y0) * img.width + x1] * fx;
        const float bot = p[static_cast<std::size_t>(y1) * img.width + x0] * (1.0f - fx) +
                          p[static_cast<std::size_t>(y1) * img.width + x1] * fx;
        out.at(c, y, x) = top * (1.0f - fy) + bot * fy;
      }
    }
  }
  return out;
}

core::PlanarImage synthesize_blur(const core::PlanarImage& sharp,
                                  const std::vector<Homography>& homographies) {
  if (homographies.empty())
    throw std::invalid_argument("synthesize_blur: need at least one homography");
  if (sharp.space != core::ColorSpace::LinearRaw)
    throw std::invalid_argument("synthesize_blur: input must be LinearRaw");

  if (homographies.size() == 1) return warp(sharp, homographies.front());

  std::vector<double> acc(sharp.data.size(), 0.0);
  for (const auto& h : homographies) {
    const core::PlanarImage warped = warp(sharp, h);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += warped.data[i];
  }
  core::PlanarImage out(sharp.channels, sharp.height, sharp.width, sharp.space);
  const double inv_m = 1.0 / static_cast<double>(homographies.size());
  for (std::size_t i = 0; i < acc.size(); ++i)
    out.data[i] = static_cast<float>(acc[i] * inv_m);
  return out;
}

core::PlanarImage downsample(const core::PlanarImage& img, int factor) {
  if (factor < 1) throw std::invalid_argument("downsample: factor >= 1");
  if (img.height % factor != 0 || img.width % factor != 0)
    throw std::invalid_argument("downsample: dims not divisible by factor");
  if (factor == 1) return img;

  const int oh = img.height / factor;
  const int ow = img.width / factor;
  core::PlanarImage out(img.channels, oh, ow, img.space);
  const float norm = 1.0f / static_cast<float>(factor * factor);
  for (int c = 0; c < img.channels; ++c)
    for (int y = 0; y < oh; ++y)
      for (int x = 0; x < ow; ++x) {
        float s = 0.0f;
        for (int dy = 0; dy < factor; ++dy)
          for (int dx = 0; dx < factor; ++dx)
            s += img.at(c, y * factor + dy, x * factor + dx);
        out.at(c, y, x) = s * norm;
      }
  return out;
}

}  // namespace nebi::degrade
