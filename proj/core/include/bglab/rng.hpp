#ifndef BGLAB_RNG_HPP_
#define BGLAB_RNG_HPP_

#include <cstdint>

namespace bglab {

  //! Counter-based generator: the draw for (seed, counter) is a pure
  //! function of both, so workers can sample disjoint counters without
  //! sharing state. The finaliser is splitmix64.
  constexpr std::uint64_t mix(std::uint64_t seed, std::uint64_t counter) noexcept {
    std::uint64_t z = seed * 0x9e3779b97f4a7c15ULL + (counter + 1) * 0xd1b54a32d192ed03ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  __extension__ typedef unsigned __int128 uint128;

  //! Maps a 64-bit draw to [0, n) by the multiply-high method.
  constexpr std::uint64_t bounded(std::uint64_t draw, std::uint64_t n) noexcept {
    return static_cast<std::uint64_t>((static_cast<uint128>(draw) * n) >> 64);
  }

  //! Uniform double in [0, 1) with 53 random bits.
  constexpr double unit_interval(std::uint64_t draw) noexcept {
    return static_cast<double>(draw >> 11) * 0x1.0p-53;
  }

}  // namespace bglab

#endif  // BGLAB_RNG_HPP_
