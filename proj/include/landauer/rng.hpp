// rng.hpp — deterministic counter-splittable random streams. Each Monte-Carlo
// sample owns a stream derived from (seed, sample index), so results do not
// depend on worker scheduling.

#pragma once

#include <cstdint>

namespace landauer::rng {

struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on the open interval (0, 1).
    double u01() {
        const std::uint64_t k = next() >> 11; // 53 bits
        return (static_cast<double>(k) + 0.5) * (1.0 / 9007199254740992.0);
    }
};

// Stream for one sample of a seeded experiment.
inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g{seed ^ (0xA0761D6478BD642FULL * (index + 1))};
    g.next();
    return g;
}

} // namespace landauer::rng
