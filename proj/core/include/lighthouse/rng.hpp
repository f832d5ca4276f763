#pragma once

#include <cstdint>

namespace lighthouse {

/// SplitMix64, used to expand seeds into generator state.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

/// xoshiro256++; emits the same bit stream on every platform, unlike the
/// std distributions.
struct Xoshiro256pp {
    std::uint64_t s[4] = {1, 2, 3, 4};

    static Xoshiro256pp seeded(std::uint64_t seed) {
        SplitMix64 sm{seed};
        Xoshiro256pp g;
        for (auto& w : g.s) w = sm.next();
        return g;
    }

    /// Independent substream for a (seed, stream) pair; stream results do not
    /// depend on how many workers consume them.
    static Xoshiro256pp for_stream(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 sm{seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1))};
        Xoshiro256pp g;
        for (auto& w : g.s) w = sm.next();
        return g;
    }

    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s[0] + s[3], 23) + s[0];
        const std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double next_double() { return (next() >> 11) * 0x1.0p-53; }
};

}  // namespace lighthouse
