#pragma once

// Seeded sample generators for the property tests. Fixed seeds keep every
// run identical.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace gaussquad::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::vector<double> uniforms(std::size_t count, double lo, double hi) {
    std::vector<double> v(count);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

  std::vector<double> sorted_uniforms(std::size_t count, double lo, double hi) {
    auto v = uniforms(count, lo, hi);
    std::sort(v.begin(), v.end());
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gaussquad::testing
