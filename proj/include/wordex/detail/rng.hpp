#pragma once

#include <cstdint>

namespace wordex::detail {

// splitmix64: tiny, seedable, and identical on every platform, which keeps
// generated workloads reproducible across toolchains (std::uniform_int_
// distribution makes no such promise).
struct splitmix64 {
  std::uint64_t state;

  explicit splitmix64(std::uint64_t seed) noexcept : state(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n), n > 0. Lemire's multiply-shift reduction.
  std::uint64_t bounded(std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  /// True with probability p/q.
  bool chance(std::uint64_t p, std::uint64_t q) noexcept {
    return bounded(q) < p;
  }
};

}  // namespace wordex::detail
