#pragma once

// Counter-mode random stream: every output is a pure function of
// (key, counter), so results do not depend on call order across threads.

#include <cstdint>
#include <limits>

namespace littlewood {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Word `counter` of the stream keyed by `key`.
constexpr std::uint64_t counter_word(std::uint64_t key, std::uint64_t counter) noexcept {
  return mix64(mix64(key ^ 0x6a09e667f3bcc909ULL) + counter * 0xd1b54a32d192ed03ULL);
}

/// Key derivation for a (seed, stream, lane) triple.
constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream,
                                   std::uint64_t lane) noexcept {
  return mix64(mix64(seed) ^ mix64(stream + 0x243f6a8885a308d3ULL) ^
               mix64(lane + 0x13198a2e03707344ULL));
}

/// Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit constexpr CounterRng(std::uint64_t seed, std::uint64_t stream = 0,
                                std::uint64_t lane = 0) noexcept
      : key_(derive_key(seed, stream, lane)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept { return counter_word(key_, counter_++); }

  /// Uniform value in [0, bound); bound must be positive.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t v;
    do {
      v = (*this)();
    } while (v >= limit);
    return v % bound;
  }

  constexpr std::uint64_t key() const noexcept { return key_; }
  constexpr std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace littlewood
