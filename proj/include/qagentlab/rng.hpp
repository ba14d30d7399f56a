#pragma once

#include <cstdint>
#include <random>

namespace qal {

// SplitMix64 finalizer; used to derive independent per-component streams
// from one master seed. Stream i never changes when new components are added.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Component ids for stream splitting. Append only.
enum class Stream : std::uint64_t {
    ActionSampling = 0,
    Environment = 1,
    KeyGeneration = 2,
    Measurement = 3,
};

inline std::mt19937_64 make_stream(std::uint64_t master_seed, Stream id) {
    return std::mt19937_64(
        splitmix64(master_seed ^ splitmix64(static_cast<std::uint64_t>(id) + 1)));
}

// Uniform double in [0,1) with 53 random bits. Hand-rolled so histograms are
// bit-identical across standard library implementations.
inline double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace qal
