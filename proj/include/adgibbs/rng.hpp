#pragma once

#include <cstdint>

namespace adgibbs {

/// Counter-based pseudo-random generator.
///
/// Output word k of a stream with key `key` is
///   mix64(key + (k+1) * 0x9E3779B97F4A7C15)
/// where mix64 is the SplitMix64 finalizer (Steele, Lea, Flood 2014).
/// A word depends only on (key, k), so draws can be reproduced out of
/// order and replica substreams derived with substream() give results
/// that do not depend on execution schedule.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  /// Stream for replica `replica_index` of a run seeded with `base_seed`.
  static CounterRng substream(std::uint64_t base_seed,
                              std::uint64_t replica_index);

  std::uint64_t next_u64();

  /// Uniform draw in [0,1) with 53 random mantissa bits. One counter word.
  double next_uniform();

  /// Standard normal via Box-Muller; consumes exactly two uniforms.
  double next_normal();

  std::uint64_t words_consumed() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

}  // namespace adgibbs
