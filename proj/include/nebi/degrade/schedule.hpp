#pragma once

#include <vector>

namespace nebi::degrade {

// Per-burst exposure plan. Gains are tied to exposures by
// gains[i] = max(exposures) / exposures[i], so every frame reaches the same
// brightness and short exposures carry the most amplification.
struct ExposureSchedule {
  std::vector<float> exposures;  // seconds, nondecreasing
  std::vector<float> gains;

  int size() const { return static_cast<int>(exposures.size()); }
  void validate() const;  // throws std::invalid_argument

  // n exposures linearly spaced over [min_s, max_s].
  static ExposureSchedule linear(int n, float min_s, float max_s);
};

}  // namespace nebi::degrade
