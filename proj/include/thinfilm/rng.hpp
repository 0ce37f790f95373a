#pragma once

#include <cmath>
#include <cstdint>

namespace thinfilm {

// Counter-based pseudorandom stream (SplitMix64). The k-th output is a pure
// function of (seed, k), so a stream owned by one path produces the same
// sequence no matter how paths are scheduled across threads. Normal draws
// use Box-Muller and consume exactly two uniforms each, which keeps the
// counter advance deterministic.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), counter_(0) {}

    std::uint64_t next_u64() {
        std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1) with 53 bits.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal deviate.
    double next_normal() {
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log1p(-u1));  // 1-u1 in (0,1]
        return r * std::cos(6.283185307179586476925286766559 * u2);
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

}  // namespace thinfilm
