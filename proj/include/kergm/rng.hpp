#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace kergm {

// Identifier recorded in run metadata so results can be tied to the exact
// random stream that produced them.
inline constexpr const char* rng_stream_id = "splitmix64/u53/box-muller-v1";

// SplitMix64: a 64-bit counter-based stream (Steele, Lea, Flood 2014).
// The state advances by a fixed odd constant and each output is a bijective
// mix of the counter, so the sequence for a given seed is identical on every
// platform. All randomness in this project flows through this type.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) from the top 53 bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Standard normal via the basic Box-Muller transform. Consumes exactly two
    // uniforms per draw (the sine branch is discarded) so the stream layout
    // does not depend on caller pairing.
    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Unbiased integer in [0, bound) by rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }

  private:
    std::uint64_t state_;
};

// Deterministic seed derivation: feeding each word through the SplitMix64
// output function keeps derived streams decorrelated from the parent and from
// each other. Used for per-trial and per-phase sub-streams.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    SplitMix64 m(a ^ 0xD1B54A32D192ED03ull);
    const std::uint64_t h = m.next() ^ b;
    SplitMix64 m2(h);
    return m2.next();
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix_seed(mix_seed(a, b), c);
}

} // namespace kergm
