#pragma once

#include <cmath>
#include <cstdint>

namespace qdc {

// SplitMix64 (Steele/Lea/Flood 2014). Every random number in the project
// flows from a single 64-bit seed through this generator; child streams are
// derived with split(), so experiments are reproducible across platforms
// and languages.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Child generator for an independent substream. Mixing the tag through
    // the parent stream keeps distinct tags (and distinct parents) apart.
    SplitMix64 split(uint64_t tag) {
        uint64_t s = next_u64() ^ (tag * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
        return SplitMix64(s);
    }

    // Standard normal via Box-Muller (uses two u01 draws per pair).
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_u01();
        double u2 = next_u01();
        while (u1 <= 0.0) u1 = next_u01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

  private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace qdc
