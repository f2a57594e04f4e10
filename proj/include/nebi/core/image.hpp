#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nebi::core {

enum class ColorSpace { LinearRaw, SRGB };

// Planar C x H x W float image. Values are never clamped implicitly;
// every operation states its own clipping policy.
struct PlanarImage {
  int channels = 0;
  int height = 0;
  int width = 0;
  ColorSpace space = ColorSpace::LinearRaw;
  std::vector<float> data;  // [c][y][x] row-major

  PlanarImage() = default;
  PlanarImage(int c, int h, int w, ColorSpace s, float fill = 0.0f)
      : channels(c), height(h), width(w), space(s),
        data(static_cast<std::size_t>(c) * h * w, fill) {
    if (c < 1 || h < 2 || w < 2)
      throw std::invalid_argument("PlanarImage: need C >= 1 and H,W >= 2");
  }

  float& at(int c, int y, int x) {
    return data[(static_cast<std::size_t>(c) * height + y) * width + x];
  }
  float at(int c, int y, int x) const {
    return data[(static_cast<std::size_t>(c) * height + y) * width + x];
  }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(height) * width;
  }
};

// 2x2 RGGB sites packed as four planes at half resolution:
// plane 0 = R (even row, even col), 1 = G (even, odd),
// plane 2 = G (odd, even),          3 = B (odd, odd).
struct PackedRaw {
  int height = 0;  // packed height = full-resolution H / 2
  int width = 0;
  std::vector<float> data;  // [4][height][width]

  PackedRaw() = default;
  PackedRaw(int h, int w, float fill = 0.0f)
      : height(h), width(w), data(static_cast<std::size_t>(4) * h * w, fill) {
    if (h < 1 || w < 1) throw std::invalid_argument("PackedRaw: empty plane");
  }

  float& at(int plane, int y, int x) {
    return data[(static_cast<std::size_t>(plane) * height + y) * width + x];
  }
  float at(int plane, int y, int x) const {
    return data[(static_cast<std::size_t>(plane) * height + y) * width + x];
  }
};

}  // namespace nebi::core
