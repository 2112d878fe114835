#pragma once

// Seeded randomness with a fixed algorithm: mt19937_64 raw output, bounded
// integers by rejection, reals from the top 53 bits. The standard library's
// distributions are implementation-defined, so none are used here.

#include <cstdint>
#include <random>
#include <vector>

namespace littlewood {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform real in [0, 1).
  double uniform_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform real in [lo, hi).
  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform_real(); }

  /// `count` distinct integers drawn uniformly from [lo, hi], ascending.
  std::vector<std::int64_t> distinct_sample(std::int64_t lo, std::int64_t hi, std::size_t count);

  /// Independent child stream derived from this one (splitmix64 of a draw).
  Rng split();

 private:
  std::mt19937_64 engine_;
};

}  // namespace littlewood
