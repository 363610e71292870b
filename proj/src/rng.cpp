#include "tensoratoms/rng.hpp"

namespace ta {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
    SplitMix64 seeder(seed);
    for (auto& word : s_) word = seeder.next();
}

std::uint64_t Xoshiro256::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return SplitMix64(seed ^ ((stream + 1) * 0x9E3779B97F4A7C15ULL)).next();
}

Int uniform_below(Xoshiro256& rng, const Int& n) {
    if (n <= 0) throw error("uniform_below requires n >= 1");
    if (n == 1) return 0;
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    const std::size_t top_bits = bits - 64 * (words - 1);
    const std::uint64_t top_mask =
        top_bits >= 64 ? ~0ULL : ((std::uint64_t(1) << top_bits) - 1);
    while (true) {
        Int value = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t word = rng.next();
            if (w == 0) word &= top_mask;
            value <<= 64;
            value += Int(static_cast<unsigned long>(word));
        }
        if (value < n) return value;
    }
}

}  // namespace ta
