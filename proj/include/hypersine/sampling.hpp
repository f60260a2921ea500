#pragma once

#include <cstdint>
#include <random>

namespace hypersine {

/**
 * Reproducible sampling: std::mt19937_64 (its output sequence is fixed by
 * the standard) with doubles formed from the top 53 bits of each word.
 * Standard-library distributions are avoided because their algorithms are
 * implementation-defined.
 */
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1).
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  bool coin() { return (gen_() >> 63) != 0; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace hypersine
