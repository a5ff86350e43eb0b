#pragma once

#include <cstdint>

namespace draim {

// SplitMix64 (Steele, Lea, Flood 2014). Portable and fully specified, so the
// same seed produces the same stream in any language.
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // (next() >> 11) * 2^-53, in [0, 1).
  double uniform01();

  // lo + (hi - lo) * uniform01(). Returns lo exactly when lo == hi.
  double uniform(double lo, double hi);

  // next() % n. n must be > 0.
  std::uint64_t below(std::uint64_t n);

  // -log(1 - u) / rate with u = uniform01().
  double exponential(double rate);

 private:
  std::uint64_t state_;
};

// Seed of the independent stream with the given index:
//   first output of SplitMix64(seed ^ (0xD1B54A32D192ED03 * (index + 1))).
// Streams depend only on (seed, index), so stream k is the same no matter how
// many other streams are drawn.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace draim
