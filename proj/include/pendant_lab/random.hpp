#pragma once

// Portable seeded randomness.
//
// Every sample stream is std::mt19937_64 (whose output sequence is fixed by
// the C++ standard) seeded with SplitMix64(seed, index). Floating-point and
// integer variates are derived from the raw 64-bit words by code in this
// library rather than by <random> distributions, whose algorithms differ
// between standard library implementations.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace pendant_lab {

inline constexpr std::uint64_t kDefaultSeed = 20240517;

std::uint64_t splitmix64(std::uint64_t x);
// Seed of draw `index` in a stream with master seed `seed`.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  static Rng for_draw(std::uint64_t seed, std::uint64_t index) { return Rng(sub_seed(seed, index)); }

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double uniform01();
  // Uniform on {0, ..., bound-1}; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Poisson variate by sequential inversion of the CDF.
  int poisson(double mean);
  // Index i with probability weights[i] / sum, by inversion on the cumulative
  // sums (which must be nondecreasing, last entry the total).
  std::size_t pick_cumulative(std::span<const double> cumulative);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pendant_lab
