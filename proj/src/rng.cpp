#include "accretive/rng.hpp"

#include <cmath>

namespace accretive {

double SplitMix64::log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

double SplitMix64::gauss() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u is kept away from 0 so log(u) is finite.
    double u = uniform01();
    if (u < 0x1.0p-60) u = 0x1.0p-60;
    const double v = uniform01();
    const double rad = std::sqrt(-2.0 * std::log(u));
    const double ang = 6.283185307179586476925286766559 * v;
    spare_ = rad * std::sin(ang);
    have_spare_ = true;
    return rad * std::cos(ang);
}

uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (const char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

uint64_t trial_seed(uint64_t master_seed, std::string_view case_id, uint64_t index) {
    const uint64_t keyed = SplitMix64::mix(master_seed ^ fnv1a64(case_id));
    return SplitMix64::mix(keyed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

}  // namespace accretive
