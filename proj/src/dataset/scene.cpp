#include "nebi/dataset/scene.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nebi::dataset {

namespace {

// Hash-based lattice value in [0, 1) for unlimited drift range.
float lattice_value(std::uint64_t seed, int ix, int iy, int octave) {
  std::uint64_t h = seed;
  h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(ix)) * 0x9E3779B97F4A7C15ull;
  h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(iy)) * 0xC2B2AE3D27D4EB4Full;
  h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(octave)) * 0x165667B19E3779F9ull;
  h = (h ^ (h >> 30)) * 0xBF58476D1CE4E5B9ull;
  h = (h ^ (h >> 27)) * 0x94D049BB133111EBull;
  h ^= h >> 31;
  return static_cast<float>(h >> 40) * 0x1.0p-24f;
}

float smoothstep(float t) { return t * t * (3.0f - 2.0f * t); }

// Multi-octave value noise in [0, 1], smooth enough to leave flat patches.
float value_noise(std::uint64_t seed, float x, float y, int octaves,
                  float base_cell) {
  float total = 0.0f;
  float amp = 1.0f;
  float amp_sum = 0.0f;
  float cell = base_cell;
  for (int o = 0; o < octaves; ++o) {
    const float gx = x / cell;
    const float gy = y / cell;
    const int ix = static_cast<int>(std::floor(gx));
    const int iy = static_cast<int>(std::floor(gy));
    const float fx = smoothstep(gx - static_cast<float>(ix));
    const float fy = smoothstep(gy - static_cast<float>(iy));
    const float v00 = lattice_value(seed, ix, iy, o);
    const float v10 = lattice_value(seed, ix + 1, iy, o);
    const float v01 = lattice_value(seed, ix, iy + 1, o);
    const float v11 = lattice_value(seed, ix + 1, iy + 1, o);
    const float v = (v00 * (1 - fx) + v10 * fx) * (1 - fy) +
                    (v01 * (1 - fx) + v11 * fx) * fy;
    total += amp * v;
    amp_sum += amp;
    amp *= 0.5f;
    cell *= 0.5f;
  }
  return total / amp_sum;
}

struct Polygon {
  std::vector<std::array<float, 2>> verts;  // convex, counter-clockwise
  std::array<float, 3> color;
  float stripe_freq;
  std::array<float, 2> stripe_dir;
  float stripe_amp;

  bool contains(float x, float y) const {
    const std::size_t n = verts.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = verts[i];
      const auto& b = verts[(i + 1) % n];
      const float cross = (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]);
      if (cross < 0.0f) return false;
    }
    return true;
  }
};

struct Scene {
  std::uint64_t noise_seed;
  int octaves;
  float base_cell;
  std::vector<Polygon> polygons;

  void shade(float x, float y, float rgb[3]) const {
    const float bg = 0.15f + 0.5f * value_noise(noise_seed, x, y, octaves, base_cell);
    rgb[0] = bg;
    rgb[1] = bg * 0.9f + 0.05f;
    rgb[2] = bg * 0.8f + 0.1f;
    for (const auto& poly : polygons) {
      if (!poly.contains(x, y)) continue;
      const float phase =
          (x * poly.stripe_dir[0] + y * poly.stripe_dir[1]) * poly.stripe_freq;
      const float tex = 1.0f - poly.stripe_amp * (0.5f + 0.5f * std::sin(phase));
      for (int c = 0; c < 3; ++c) rgb[c] = poly.color[c] * tex;
    }
    for (int c = 0; c < 3; ++c) rgb[c] = std::clamp(rgb[c], 0.0f, 1.0f);
  }
};

Scene build_scene(const SceneConfig& cfg, core::Rng& rng) {
  Scene scene;
  scene.noise_seed = rng.next_u64();
  scene.octaves = std::max(1, cfg.texture_octaves);
  scene.base_cell = static_cast<float>(cfg.resolution) / 4.0f;

  const float res = static_cast<float>(cfg.resolution);
  for (int k = 0; k < cfg.object_count; ++k) {
    Polygon poly;
    const float cx = res * rng.next_float();
    const float cy = res * rng.next_float();
    const float radius = res * (0.06f + 0.14f * rng.next_float());
    const int n_verts = 3 + static_cast<int>(rng.next_u64() % 4);  // 3..6
    const float phase0 = 2.0f * static_cast<float>(M_PI) * rng.next_float();
    for (int v = 0; v < n_verts; ++v) {
      // Regular angles with radii in [0.8r, r] stay convex for n <= 6.
      const float ang = phase0 + 2.0f * static_cast<float>(M_PI) * v / n_verts;
      const float r = radius * (0.8f + 0.2f * rng.next_float());
      poly.verts.push_back({cx + r * std::cos(ang), cy + r * std::sin(ang)});
    }
    poly.color = {0.1f + 0.85f * rng.next_float(), 0.1f + 0.85f * rng.next_float(),
                  0.1f + 0.85f * rng.next_float()};
    const float dir_ang = 2.0f * static_cast<float>(M_PI) * rng.next_float();
    poly.stripe_dir = {std::cos(dir_ang), std::sin(dir_ang)};
    poly.stripe_freq = 0.2f + 0.6f * rng.next_float();
    poly.stripe_amp = 0.35f * rng.next_float();
    scene.polygons.push_back(std::move(poly));
  }
  return scene;
}

}  // namespace

void SceneConfig::validate() const {
  if (resolution < 8 || resolution % 2 != 0)
    throw std::invalid_argument("SceneConfig: resolution must be even and >= 8");
  if (object_count < 0 || texture_octaves < 1)
    throw std::invalid_argument("SceneConfig: bad object/octave counts");
  if (!(drift_px >= 0.0f) || !(jitter_px >= 0.0f) || drift_px + jitter_px > 4.0f)
    throw std::invalid_argument("SceneConfig: drift + jitter must be <= 4 px/frame");
}

std::vector<core::PlanarImage> generate_scene_sequence(const SceneConfig& cfg,
                                                       int n_frames,
                                                       core::Rng& rng) {
  cfg.validate();
  if (n_frames < 2)
    throw std::invalid_argument("generate_scene_sequence: n_frames >= 2");

  const Scene scene = build_scene(cfg, rng);
  const float drift_ang = 2.0f * static_cast<float>(M_PI) * rng.next_float();
  const float drift_x = cfg.drift_px * std::cos(drift_ang);
  const float drift_y = cfg.drift_px * std::sin(drift_ang);

  std::vector<core::PlanarImage> frames;
  frames.reserve(n_frames);
  for (int k = 0; k < n_frames; ++k) {
    float off_x = drift_x * static_cast<float>(k);
    float off_y = drift_y * static_cast<float>(k);
    if (k > 0 && cfg.jitter_px > 0.0f) {
      off_x += cfg.jitter_px * (2.0f * rng.next_float() - 1.0f);
      off_y += cfg.jitter_px * (2.0f * rng.next_float() - 1.0f);
    }
    core::PlanarImage img(3, cfg.resolution, cfg.resolution,
                          core::ColorSpace::SRGB);
    float rgb[3];
    for (int y = 0; y < cfg.resolution; ++y)
      for (int x = 0; x < cfg.resolution; ++x) {
        scene.shade(static_cast<float>(x) + off_x, static_cast<float>(y) + off_y,
                    rgb);
        for (int c = 0; c < 3; ++c) img.at(c, y, x) = rgb[c];
      }
    frames.push_back(std::move(img));
  }
  return frames;
}

}  // namespace nebi::dataset
