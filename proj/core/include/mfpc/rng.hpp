#pragma once

#include <cstdint>
#include <string_view>

namespace mfpc::rng {

// Generator identifier pinned into output metadata so runs are reproducible
// across invocations of the same build.
inline constexpr std::string_view kAlgorithm = "splitmix64-v1";

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

// SplitMix64 (Steele, Lea, Flood): 64-bit counter state, one mix per draw.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

  constexpr std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// All randomness flows from one master seed. A stream is keyed by a purpose
// tag plus an optional index (trial number, sweep cell), so concurrent
// consumers draw schedule-independent values.
inline SplitMix64 stream(std::uint64_t master_seed, std::string_view tag,
                         std::uint64_t index = 0) {
  const std::uint64_t key = fnv1a64(tag) + 0x9E3779B97F4A7C15ULL * index;
  return SplitMix64(mix64(master_seed ^ 0x6A09E667F3BCC909ULL) ^ mix64(key));
}

}  // namespace mfpc::rng
