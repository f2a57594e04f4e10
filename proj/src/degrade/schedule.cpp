#include "nebi/degrade/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace nebi::degrade {

void ExposureSchedule::validate() const {
  if (exposures.size() < 2)
    throw std::invalid_argument("ExposureSchedule: need at least 2 frames");
  if (exposures.size() != gains.size())
    throw std::invalid_argument("ExposureSchedule: exposures/gains mismatch");
  float max_exp = 0.0f;
  for (float e : exposures) {
    if (!(e > 0.0f))
      throw std::invalid_argument("ExposureSchedule: non-positive exposure");
    max_exp = std::max(max_exp, e);
  }
  for (std::size_t i = 1; i < exposures.size(); ++i)
    if (exposures[i] < exposures[i - 1])
      throw std::invalid_argument("ExposureSchedule: exposures must be nondecreasing");
  for (std::size_t i = 0; i < gains.size(); ++i) {
    const float expected = max_exp / exposures[i];
    if (std::abs(gains[i] - expected) > 1e-4f * expected)
      throw std::invalid_argument(
          "ExposureSchedule: gains must equal max(exposures)/exposures[i]");
  }
}

ExposureSchedule ExposureSchedule::linear(int n, float min_s, float max_s) {
  if (n < 2) throw std::invalid_argument("ExposureSchedule: need n >= 2");
  if (!(min_s > 0.0f) || max_s < min_s)
    throw std::invalid_argument("ExposureSchedule: need 0 < min_s <= max_s");
  ExposureSchedule s;
  s.exposures.resize(n);
  s.gains.resize(n);
  for (int i = 0; i < n; ++i) {
    const float t = n == 1 ? 0.0f : static_cast<float>(i) / (n - 1);
    s.exposures[i] = min_s + t * (max_s - min_s);
  }
  for (int i = 0; i < n; ++i) s.gains[i] = s.exposures[n - 1] / s.exposures[i];
  return s;
}

}  // namespace nebi::degrade
