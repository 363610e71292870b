#pragma once

#include <cstdint>

#include "tensoratoms/weight.hpp"

namespace ta {

// SplitMix64; used for seeding and for deriving independent streams.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

// xoshiro256** seeded through SplitMix64. Bit-identical output on every
// platform; all randomness in the library flows through this generator.
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed);

    std::uint64_t next();

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t s_[4];
};

// Stream derivation rule: stream k of a user seed is seeded with
// SplitMix64(seed ^ (k+1) * 0x9E3779B97F4A7C15) .next(). Independent
// streams back concurrent sampling and per-sample reproducibility.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream);

// Exactly uniform integer in [0, n), n >= 1, by rejection over the top
// bit-length of n. Consumes 64-bit words most-significant-first.
Int uniform_below(Xoshiro256& rng, const Int& n);

}  // namespace ta
