#pragma once

#include <cstdint>

namespace trifree {

/// splitmix64 finalizer (Vigna / Steele-Lea-Flood).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

/// Sequential splitmix64 stream. Used by the instance generators,
/// where draws are consumed in a fixed scan order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += kGolden);
    return mix64(z);
  }

  /// Uniform double in [0, 1).
  double uniform01() noexcept { return double(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) noexcept {
    return std::uint64_t((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

/// Counter-based per-trial RNG. Every draw is a pure function of
/// (seed, round, vertex, color, tag), so the value does not depend on
/// evaluation order or on how many other draws were made. This is what
/// lets a naive reference implementation replay a round bit-exactly.
class TrialRng {
 public:
  enum Tag : std::uint64_t {
    tag_assign = 1,    // phase I coloring attempt
    tag_equalize = 2,  // phase II.2 equalizing coin
  };

  explicit TrialRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t word(std::uint64_t round, std::uint64_t vertex, std::uint64_t color,
                     std::uint64_t tag) const noexcept {
    std::uint64_t x = seed_;
    x = mix64(x + kGolden * (round + 1));
    x = mix64(x + kGolden * (vertex + 1));
    x = mix64(x + kGolden * (color + 1));
    x = mix64(x + kGolden * (tag + 1));
    return x;
  }

  double uniform(std::uint64_t round, std::uint64_t vertex, std::uint64_t color,
                 std::uint64_t tag) const noexcept {
    return double(word(round, vertex, color, tag) >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p, std::uint64_t round, std::uint64_t vertex, std::uint64_t color,
                 std::uint64_t tag) const noexcept {
    return uniform(round, vertex, color, tag) < p;
  }

 private:
  std::uint64_t seed_;
};

}  // namespace trifree
