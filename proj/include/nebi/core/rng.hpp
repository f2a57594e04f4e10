#pragma once

#include <array>
#include <cstdint>

namespace nebi::core {

// xoshiro256** seeded through SplitMix64 (reference algorithms by Blackman &
// Vigna). Pure integer state transitions, so identical seeds give identical
// streams on every platform. Child streams are derived from the creation
// seed and a split index, never by sharing or jumping live state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform in [0, 1) with 53 random bits.
  double next_double();
  float next_float();

  // Standard normal deviate via Box-Muller: one pair of uniforms yields two
  // deviates, the second is cached. The log argument is guarded away from 0.
  float gaussian();

  // Independent stream for task `index`. Derivation hashes (seed, index),
  // so the parent is left untouched and children never overlap it.
  Rng child(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_ = 0;  // creation seed, kept for child derivation
  std::array<std::uint64_t, 4> state_{};
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace nebi::core
