#pragma once

#include <cstdint>
#include <string_view>

#include "accretive/types.hpp"

namespace accretive {

/// SplitMix64: 64-bit counter-based generator.
/// Constants: gamma 0x9E3779B97F4A7C15, mix multipliers 0xBF58476D1CE4E5B9
/// and 0x94D049BB133111EB (Steele, Lea, Flood 2014). Deterministic across
/// platforms; every trial in a sweep owns an independent stream keyed by a
/// stable hash, so aggregation order cannot affect results.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// log-uniform in [lo, hi), lo > 0.
    double log_uniform(double lo, double hi);

    /// Standard normal via Box-Muller (second value cached).
    double gauss();

    /// Complex standard normal: unit-variance real and imaginary parts.
    cdouble cgauss() { return {gauss(), gauss()}; }

    uint64_t state() const { return state_; }

  private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// FNV-1a 64-bit hash (offset 0xCBF29CE484222325, prime 0x100000001B3).
uint64_t fnv1a64(std::string_view s);

/// Stable per-trial seed: decouples cases and trials so adding or reordering
/// either never changes another trial's stream.
uint64_t trial_seed(uint64_t master_seed, std::string_view case_id, uint64_t index);

}  // namespace accretive
