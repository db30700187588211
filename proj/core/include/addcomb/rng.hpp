#pragma once

#include <cstdint>

namespace addcomb {

/// SplitMix64 (Steele/Lea/Flood 2014). One 64-bit word of state, fixed
/// public constants, identical output on every platform. Every randomized
/// run records {"rng": "splitmix64", "seed": ...} so instances can be
/// replayed bit-for-bit. fork(i) derives an independent stream per sweep
/// instance, so results do not depend on execution order.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1), 53 random mantissa bits (a dyadic rational, so it
    /// can be compared against an exact rational density with no tolerance).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Mantissa form of next_double: value is m / 2^53.
    std::uint64_t next_mantissa53() { return next() >> 11; }

    /// Uniform integer in [0, bound) by rejection (bound >= 1).
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    /// Independent child stream for sweep instance i.
    SplitMix64 fork(std::uint64_t i) const {
        SplitMix64 mixer(state_ ^ (0xA0761D6478BD642Full + i));
        return SplitMix64(mixer.next());
    }

    static constexpr const char* id() { return "splitmix64"; }

private:
    std::uint64_t state_;
};

} // namespace addcomb
