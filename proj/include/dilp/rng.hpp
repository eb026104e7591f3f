#pragma once

#include <cstdint>
#include <random>

#include "dilp/core.hpp"

namespace dilp {

// Seeded stream. Child streams are derived with splitmix64 so that
// stream (seed, k) never depends on how many numbers other streams drew.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), eng_(mix(seed)) {}

  static uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  Rng split(uint64_t k) const { return Rng(mix(seed_ ^ mix(k + 0x632be59bd9b4e019ULL))); }
  uint64_t seed() const { return seed_; }

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
  Int uniform_int(long lo, long hi) { return Int(uniform(lo, hi)); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  double real() { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_); }
  std::mt19937_64& engine() { return eng_; }

 private:
  uint64_t seed_;
  std::mt19937_64 eng_;
};

}  // namespace dilp
