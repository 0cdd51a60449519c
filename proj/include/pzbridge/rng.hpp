#pragma once

#include <cmath>
#include <cstdint>

namespace pzbridge {

/// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// SplitMix64 generator.  Used as the base RNG because its per-index
/// substreams are trivial to construct: sampling work indexed by i draws from
/// SampleStream(seed, i) and is therefore independent of how sample indices
/// are partitioned across threads.
class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t state) : state_(state) {}

    constexpr std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform double in (0, 1].
    double next_unit() {
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

/// Deterministic per-sample random stream: Gaussians via Box-Muller on top of
/// SplitMix64 seeded from (seed, index).
class SampleStream {
  public:
    SampleStream(std::uint64_t seed, std::uint64_t index)
        : gen_(mix64(seed ^ 0x6C62272E07BB0142ULL) +
               index * 0x9E3779B97F4A7C15ULL) {}

    /// Standard normal deviate.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = gen_.next_unit();
        const double u2 = gen_.next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(phi);
        have_spare_ = true;
        return r * std::cos(phi);
    }

  private:
    SplitMix64 gen_;
    double spare_{0.0};
    bool have_spare_{false};
};

}  // namespace pzbridge
