#pragma once

#include <vector>

#include "nebi/core/image.hpp"
#include "nebi/core/rng.hpp"

namespace nebi::dataset {

// Procedural scene source: value-noise background plus textured convex
// polygons, rendered under a global translational drift with per-frame
// jitter. Stands in for handheld video as the sharp-frame supply.
struct SceneConfig {
  int resolution = 128;
  int object_count = 12;
  int texture_octaves = 3;
  float drift_px = 1.0f;   // drift magnitude per frame; direction drawn per scene
  float jitter_px = 0.5f;  // uniform per-frame jitter bound, per axis

  void validate() const;  // drift + jitter capped at 4 px/frame
};

std::vector<core::PlanarImage> generate_scene_sequence(const SceneConfig& cfg,
                                                       int n_frames,
                                                       core::Rng& rng);

}  // namespace nebi::dataset
