#include "pendant_lab/random.hpp"

#include <algorithm>
#include <cmath>

#include "pendant_lab/error.hpp"

namespace pendant_lab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ContractError("Rng::below(0)");
  // Rejection sampling on the top of the range keeps the result unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

int Rng::poisson(double mean) {
  if (!(mean >= 0.0) || mean > 700.0) throw ContractError("poisson mean out of range");
  if (mean == 0.0) return 0;
  double u = uniform01();
  double p = std::exp(-mean);
  double cdf = p;
  int k = 0;
  while (u >= cdf) {
    ++k;
    p *= mean / k;
    const double next_cdf = cdf + p;
    // The CDF stalls at 1 - ulp in floating point.
    if (next_cdf == cdf) break;
    cdf = next_cdf;
  }
  return k;
}

std::size_t Rng::pick_cumulative(std::span<const double> cumulative) {
  if (cumulative.empty() || !(cumulative.back() > 0.0)) {
    throw ContractError("pick_cumulative needs positive total weight");
  }
  const double u = uniform01() * cumulative.back();
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  if (it == cumulative.end()) --it;
  return static_cast<std::size_t>(it - cumulative.begin());
}

}  // namespace pendant_lab
