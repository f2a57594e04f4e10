#pragma once

#include <vector>

#include "nebi/core/image.hpp"
#include "nebi/degrade/homography.hpp"

namespace nebi::degrade {

// Inverse warp with bilinear sampling: out(p) = img(H^-1 p). Out-of-frame
// samples mirror across the borders. Identity homographies are passed
// through bit-exactly.
core::PlanarImage warp(const core::PlanarImage& img, const Homography& h);

// Mean of warps over the given trajectory. Input must be LinearRaw; blur is
// only physically meaningful in linear light.
core::PlanarImage synthesize_blur(const core::PlanarImage& sharp,
                                  const std::vector<Homography>& homographies);

// Non-overlapping factor x factor block average per channel.
core::PlanarImage downsample(const core::PlanarImage& img, int factor);

}  // namespace nebi::degrade
