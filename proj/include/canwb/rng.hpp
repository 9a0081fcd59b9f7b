#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace canwb {

// splitmix64 finalizer; good avalanche for seed derivation.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

// Derives an independent stream seed from (user seed, entity tag, index).
// Stable across platforms so that seeded runs are reproducible everywhere.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag,
                                 std::uint64_t n = 0) {
    return mix64(mix64(seed ^ fnv1a(tag)) + n);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed, std::string_view tag, std::uint64_t n = 0) {
    return Rng(derive_seed(seed, tag, n));
}

// N(0,1) draw kept separate from sigma so that sigma == 0 yields exact zeros.
// A fresh distribution per call: normal_distribution caches a spare value,
// which would leak state between unrelated seeded streams.
inline double standard_normal(Rng& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    return dist(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::uint64_t uniform_index(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

} // namespace canwb
