#pragma once

#include <cstdint>

namespace lamina {

// splitmix64: deterministic across platforms and standard library versions,
// which std::uniform_int_distribution is not.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) by rejection; n must be positive.
  std::uint64_t next_below(std::uint64_t n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  std::int64_t next_range(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + (std::int64_t)next_below((std::uint64_t)(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace lamina
