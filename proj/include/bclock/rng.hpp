#pragma once

#include <cstdint>

namespace bclock {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based generator: the stream for (seed, stream_id) is fixed, so
/// trial i draws the same numbers no matter which thread runs it.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream_id)
      : key_(mix64(seed ^ mix64(stream_id ^ 0x6a09e667f3bcc909ULL))) {}

  std::uint64_t next_u64() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace bclock
