#pragma once

#include <cstdint>
#include <limits>

namespace awm {

// SplitMix64. The i-th output (0-based) of a stream seeded with `s` is
// mix(s + (i + 1) * 0x9E3779B97F4A7C15), so the sequence is a pure function of
// (seed, counter) and identical on every platform. Only the helpers below are
// used to turn raw words into numbers; std:: distributions are
// implementation-defined and must not be used anywhere results are persisted.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    explicit constexpr SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    constexpr result_type operator()() noexcept { return mix(state_ += kGamma); }

    // Uniform integer in [0, bound). bound must be > 0.
    constexpr std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = (*this)();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    constexpr double uniform() noexcept {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    constexpr bool bernoulli(double p) noexcept { return uniform() < p; }

    constexpr std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

// Seed of the independent sub-stream `index` of `seed` (per-episode, per-retry, ...).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64::mix(seed ^ SplitMix64::mix(index + 0xD1B54A32D192ED03ULL));
}

}  // namespace awm
