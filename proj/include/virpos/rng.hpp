#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace virpos {

// SplitMix64 finalizer. All seed derivation in the project goes through
// this so that any single work item can be reproduced in isolation.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t combine_seed(std::uint64_t seed, std::uint64_t a,
                                  std::uint64_t b = 0) {
  return mix64(seed ^ mix64(a ^ mix64(b)));
}

// mt19937_64 stream with hand-rolled bounded draws. The engine itself is
// pinned by the standard; std::uniform_int_distribution and std::shuffle
// are not, and determinism across toolchains is a contract here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform draw in [0, bound), bound >= 1. Mask-and-reject keeps the
  // distribution exact.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = ~0ull >> __builtin_clzll(bound - 1 | 1);
    for (;;) {
      std::uint64_t v = gen_() & mask;
      if (v < bound) return v;
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace virpos
