#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace faithcheck {

inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Every random choice in the pipeline flows from one master seed through
// this derivation, so stages and per-item work stay reproducible no matter
// how work is ordered or parallelized:
//   stage seed    = splitmix64(master ^ fnv1a64(stage_name))
//   per-item seed = splitmix64(stage_seed ^ fnv1a64(item_key))
inline std::uint64_t derive_seed(std::uint64_t parent, std::string_view key) {
    return splitmix64(parent ^ fnv1a64(key));
}

// mt19937_64 output is pinned by the standard; the distribution helpers
// below are hand-rolled because std::uniform_*_distribution is not.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// Uniform integer in [0, n) via rejection sampling.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

// Uniform double in [0, 1) with 53 bits of precision.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace faithcheck
