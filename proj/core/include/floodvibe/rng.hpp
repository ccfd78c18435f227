#pragma once

#include <cstdint>

namespace floodvibe {

// Counter-based random bits: a pure function of its inputs, so any work
// decomposition (threads, frame order within a batch) reproduces the
// same draws. splitmix64 finalizer chained over the counters.

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// 64 uniform bits for counter tuple (seed, stream, counter).
inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t counter) {
    std::uint64_t h = mix64(seed);
    h = mix64(h ^ stream);
    h = mix64(h ^ counter);
    return h;
}

/// Uniform in [0, n) for n >= 1. Modulo bias is < 2^-53 for the small n
/// used here (slot counts, not cryptography).
inline std::uint32_t counter_uniform(std::uint64_t seed, std::uint64_t stream,
                                     std::uint64_t counter, std::uint32_t n) {
    return static_cast<std::uint32_t>(counter_hash(seed, stream, counter) % n);
}

/// Uniform double in (0, 1]; never returns 0 so -log(u) is finite.
inline double counter_unit_double(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t counter) {
    const std::uint64_t bits = counter_hash(seed, stream, counter) >> 11;  // 53 bits
    return (static_cast<double>(bits) + 1.0) * 0x1p-53;
}

}  // namespace floodvibe
