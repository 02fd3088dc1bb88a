#pragma once

#include <cstdint>
#include <random>

namespace aiskin {

// Deterministic uniform draws on top of mt19937_64. The standard
// distributions are implementation-defined, so conversions are done by hand
// to keep generated bytes and weights identical across toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [lo, hi] via rejection-free modulo (bias negligible
  // for the small ranges used here, and fully deterministic).
  uint64_t uniform_u64(uint64_t lo, uint64_t hi) {
    return lo + engine_() % (hi - lo + 1);
  }

  bool bernoulli(double p) { return next_double() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_u64(0, i - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace aiskin
