#pragma once

#include <cstdint>

namespace pnsbounds {

/// SplitMix64 generator (Steele, Lea & Flood 2014): one additive step and
/// an avalanche finalizer per 64-bit output.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t x = (state_ += 0x9E3779B97F4A7C15ULL);
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// The (index+1)-th output of SplitMix64 seeded with `master`, computed in
/// O(1). Substreams derived this way make per-draw and per-replication
/// randomness independent of execution order, so parallel runs reproduce
/// serial results bit for bit.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t x = master + 0x9E3779B97F4A7C15ULL * (index + 1);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace pnsbounds
