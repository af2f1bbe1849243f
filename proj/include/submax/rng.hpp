#pragma once

#include <cstdint>

namespace submax {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// SplitMix64. The stream seeded by s yields mix64(s + (t+1)*kGolden) as its
// t-th output, so any stream position is addressable in O(1) without
// advancing through the prefix.
class Rng64 {
 public:
  explicit Rng64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGolden;
    return mix64(state_);
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t stream_at(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed + (index + 1) * kGolden);
}

// Independent child stream seed for trial t of a master-seeded run.
inline std::uint64_t derive(std::uint64_t master, std::uint64_t t) {
  return mix64(master ^ (t * kGolden));
}

}  // namespace submax
