#include "nebi/degrade/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace nebi::degrade {

namespace {

float log_uniform(core::Rng& rng, float lo, float hi) {
  if (!(lo > 0.0f) || hi < lo)
    throw std::invalid_argument("log_uniform: need 0 < lo <= hi");
  const double u = rng.next_double();
  return static_cast<float>(
      std::exp(std::log(static_cast<double>(lo)) +
               u * (std::log(static_cast<double>(hi)) -
                    std::log(static_cast<double>(lo)))));
}

}  // namespace

NoiseBases draw_noise_bases(core::Rng& rng, const NoiseRangeConfig& cfg) {
  NoiseBases bases;
  bases.shot = log_uniform(rng, cfg.shot_base_min, cfg.shot_base_max);
  bases.read = log_uniform(rng, cfg.read_base_min, cfg.read_base_max);
  return bases;
}

NoiseParams noise_params_for_gain(const NoiseBases& bases, float gain) {
  if (!(gain >= 1.0f))
    throw std::invalid_argument("noise_params_for_gain: gain must be >= 1");
  return NoiseParams{bases.shot * gain, bases.read * gain * gain};
}

core::PlanarImage add_noise(const core::PlanarImage& img,
                            const NoiseParams& params, core::Rng& rng) {
  if (img.space != core::ColorSpace::LinearRaw)
    throw std::invalid_argument("add_noise: input must be LinearRaw");
  if (!(params.lambda_shot >= 0.0f) || !(params.lambda_read >= 0.0f))
    throw std::invalid_argument("add_noise: negative noise parameter");

  core::PlanarImage out(img.channels, img.height, img.width, img.space);
  for (std::size_t i = 0; i < img.data.size(); ++i) {
    const float x = img.data[i];
    if (x < 0.0f)
      throw std::invalid_argument("add_noise: negative input pixel");
    const float sigma =
        std::sqrt(params.lambda_shot * x + params.lambda_read);
    out.data[i] = x + sigma * rng.gaussian();
  }
  return out;
}

}  // namespace nebi::degrade
