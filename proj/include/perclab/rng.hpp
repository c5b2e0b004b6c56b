#pragma once

#include <cstdint>

namespace perclab {

// splitmix64 finalizer (Vigna/Steele et al.), used as the mixing stage of
// the keyed generator below.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

// Counter-style keyed draw: a pure function of (seed, trial, counter).
// Parallel trials share no generator state, so the draw for a given site is
// the same whatever order trials run in.
constexpr std::uint64_t keyed_u64(std::uint64_t seed, std::uint64_t trial,
                                  std::uint64_t counter) noexcept {
    std::uint64_t h = mix64(seed + 0x9E3779B97F4A7C15ULL);
    h = mix64(h + trial * 0xBF58476D1CE4E5B9ULL);
    h = mix64(h + counter * 0x94D049BB133111EBULL);
    return h;
}

// Uniform double in [0, 1) from the top 53 bits of the keyed draw.
constexpr double keyed_uniform(std::uint64_t seed, std::uint64_t trial,
                               std::uint64_t counter) noexcept {
    return static_cast<double>(keyed_u64(seed, trial, counter) >> 11) * 0x1.0p-53;
}

}  // namespace perclab
