#include "adgibbs/rng.hpp"

#include <cmath>

namespace adgibbs {

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

CounterRng CounterRng::substream(std::uint64_t base_seed,
                                 std::uint64_t replica_index) {
  // Decorrelate the replica index before xoring it into the key.
  return CounterRng(mix64(base_seed ^ mix64(replica_index + 0x5851F42D4C957F2DULL)));
}

std::uint64_t CounterRng::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
}

double CounterRng::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_normal() {
  // Box-Muller, cosine branch. u1 is shifted away from 0 so log stays finite.
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log1p(-u1));
  return r * std::cos(2.0 * 3.14159265358979323846 * u2);
}

}  // namespace adgibbs
