#include "draim/rng.hpp"

#include <cmath>

namespace draim {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform(double lo, double hi) {
  const double u = uniform01();
  if (lo == hi) return lo;
  return lo + (hi - lo) * u;
}

std::uint64_t SplitMix64::below(std::uint64_t n) { return next() % n; }

double SplitMix64::exponential(double rate) {
  return -std::log1p(-uniform01()) / rate;
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mixer(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
  return mixer.next();
}

}  // namespace draim
