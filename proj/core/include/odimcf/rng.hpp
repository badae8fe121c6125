#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace odimcf {

// Seedable stream of pseudo-random draws on top of std::mt19937_64. All
// randomized code in this library draws through these helpers instead of
// <random> distributions, so a seed fixes the exact draw sequence on every
// platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform integer in [0, n). n must be positive.
  std::uint64_t bounded(std::uint64_t n) { return gen_() % n; }

  // Uniform real in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Uniform real in [lo, hi).
  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(bounded(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace odimcf
