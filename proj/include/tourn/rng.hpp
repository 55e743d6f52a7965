#pragma once

// Seeded, versioned pseudo-random streams.
//
// Generator: std::mt19937_64, whose output sequence is fixed by the standard.
// Only raw 64-bit draws are used; bounded integers come from rejection
// sampling here rather than from <random> distributions, whose algorithms
// differ between standard libraries.
//
// Streams: Rng(seed, stream) seeds the engine with splitmix64 applied to the
// seed key mixed with the stream id. `child(id)` derives from the parent's
// key, never from its engine state, so drawing more numbers from a parent
// never perturbs any child stream.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tourn/rational.hpp"

namespace tourn {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  static constexpr const char* kName = "mt19937_64/splitmix64-streams/v1";

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x5851f42d4c957f2dULL))), engine_(key_) {}

  Rng child(std::uint64_t stream) const { return Rng(key_, stream); }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }
  int below(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool coin() { return (engine_() >> 63) != 0; }

  /// True with probability p (p in [0, 1]).
  bool chance(const Ratio& p) {
    return below(static_cast<std::uint64_t>(p.den())) < static_cast<std::uint64_t>(p.num());
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(static_cast<std::uint64_t>(i))]);
  }

 private:
  std::uint64_t key_;
  std::mt19937_64 engine_;
};

}  // namespace tourn
