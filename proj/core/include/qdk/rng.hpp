#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace qdk::rng {

/// SplitMix64 stream with Box-Muller gaussians. Self-contained so that a
/// given seed produces the same draws on every platform and toolchain
/// (std::normal_distribution is implementation defined).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1]; safe as a log argument.
    double next_double_open() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u = next_double_open();
        const double v = next_double();
        const double r = std::sqrt(-2.0 * std::log(u));
        const double angle = 2.0 * std::numbers::pi * v;
        spare_ = r * std::sin(angle);
        have_spare_ = true;
        return r * std::cos(angle);
    }

    /// Independent substream for a trial index: reseeds through the mixer so
    /// trials can run in any order with identical results.
    SplitMix64 substream(std::uint64_t index) const {
        SplitMix64 mixer(state_ ^ (0xA0761D6478BD642Full * (index + 1)));
        return SplitMix64(mixer.next_u64());
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace qdk::rng
