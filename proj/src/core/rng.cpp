#include "nebi/core/rng.hpp"

#include <cmath>

namespace nebi::core {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Rng::Rng(std::uint64_t seed) : seed_(seed) {
  // SplitMix64 expansion of the seed into the 256-bit state.
  std::uint64_t z = seed;
  for (auto& word : state_) {
    z += kGolden;
    word = splitmix64_mix(z);
  }
}

std::uint64_t Rng::next_u64() {
  // xoshiro256**
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

float Rng::next_float() {
  return static_cast<float>(next_u64() >> 40) * 0x1.0p-24f;
}

float Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return static_cast<float>(spare_);
  }
  double u1 = next_double();
  const double u2 = next_double();
  if (u1 <= 0.0) u1 = 0x1.0p-53;  // keep log() finite
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return static_cast<float>(r * std::cos(a));
}

Rng Rng::child(std::uint64_t index) const {
  // Two mixing rounds over (seed, index); distinct indices give distinct
  // derived seeds because the mix is bijective on distinct inputs.
  return Rng(splitmix64_mix(splitmix64_mix(seed_ + kGolden * (index + 1))));
}

}  // namespace nebi::core
