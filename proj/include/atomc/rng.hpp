#pragma once

#include <cstdint>
#include <vector>

namespace atomc {

// Deterministic splittable generator (SplitMix64 core). std:: distributions are
// not bit-portable across standard library implementations, and seeded reports
// must be byte-identical, so all randomness flows through this class.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Independent stream for a named subtask; does not advance this stream.
  Rng split(std::uint64_t label) const {
    return Rng(mix(state_ ^ mix(label + 0x632be59bd9b4e019ULL)));
  }

  // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant here, the
  // generator only drives benchmark construction and test-case sampling.
  std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double next_range(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace atomc
