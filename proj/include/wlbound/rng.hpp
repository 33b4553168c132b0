#pragma once

#include <cstdint>

namespace wlb {

/// Deterministic 64-bit generator (splitmix64). Used wherever randomness is
/// needed so output depends only on the seed, not on platform or thread
/// count.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    /// Generator for stream `stream` of a master seed. Each stream is seeded
    /// by mixing the pair (seed, stream), so parallel consumers can draw
    /// independently without sharing state.
    static SplitMix64 derive(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 mixer(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
        return SplitMix64(mixer.next());
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound), bound > 0. Rejection keeps it unbiased.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace wlb
