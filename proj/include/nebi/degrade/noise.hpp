#pragma once

#include "nebi/core/image.hpp"
#include "nebi/core/rng.hpp"

namespace nebi::degrade {

// Heteroscedastic Gaussian surrogate of the Poisson-Gaussian sensor model:
// variance at signal x is lambda_shot * x + lambda_read.
struct NoiseParams {
  float lambda_shot = 0.0f;  // signal-proportional variance coefficient
  float lambda_read = 0.0f;  // signal-independent variance
};

// Per-sequence log-uniform sampling ranges for the base noise levels.
struct NoiseRangeConfig {
  float shot_base_min = 1e-4f;
  float shot_base_max = 1e-2f;
  float read_base_min = 1e-6f;
  float read_base_max = 1e-4f;
};

// Base levels drawn once per sequence and shared across the burst.
struct NoiseBases {
  float shot = 0.0f;
  float read = 0.0f;
};

NoiseBases draw_noise_bases(core::Rng& rng, const NoiseRangeConfig& cfg);

// Effective parameters of a frame amplified by digital gain g >= 1:
// shot scales with g, read with g^2 (noise added at the sensor, then gained).
NoiseParams noise_params_for_gain(const NoiseBases& bases, float gain);

// y = x + sqrt(lambda_shot x + lambda_read) eps, eps ~ N(0,1) i.i.d. per
// pixel. Input must be LinearRaw and nonnegative; output is not clipped.
core::PlanarImage add_noise(const core::PlanarImage& img,
                            const NoiseParams& params, core::Rng& rng);

}  // namespace nebi::degrade
