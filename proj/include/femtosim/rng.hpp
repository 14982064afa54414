#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace femtosim {

/// Seedable random source with a fixed, portable mapping from mt19937_64
/// output to variates. The standard distributions are intentionally avoided:
/// their algorithms differ between standard libraries, and run logs must be
/// reproducible from the seed alone.
///
/// Mapping: uniform01 takes the top 53 bits of one mt19937_64 draw;
/// exponential uses inverse-CDF -mean*ln(1-u); every variate consumes exactly
/// one engine draw.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Inverse-CDF exponential with the given mean.
    double exponential(double mean) { return -mean * std::log1p(-uniform01()); }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Uniform index in [0, n). n must be >= 1.
    std::uint64_t uniform_index(std::uint64_t n) {
        auto idx = static_cast<std::uint64_t>(uniform01() * static_cast<double>(n));
        return idx >= n ? n - 1 : idx;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace femtosim
