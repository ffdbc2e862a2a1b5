#pragma once

#include <cstdint>

namespace bell {

inline constexpr std::uint64_t kGolden64 = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer (Steele/Lea/Flood; Vigna's fixed-increment variant).
// Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr double to_unit_double(std::uint64_t word) noexcept {
    return static_cast<double>(word >> 11) * 0x1.0p-53;  // [0, 1)
}

// Stateless counter-based stream: word i of stream s under seed k is a pure
// function of (k, s, i), so partitioned generation reproduces the serial
// sequence for any thread count.
class CounterStream {
public:
    CounterStream(std::uint64_t seed, std::uint64_t stream) noexcept
        : base_(mix64(mix64(seed + kGolden64) ^ stream)) {}

    std::uint64_t word(std::uint64_t counter) const noexcept {
        return mix64(base_ + counter * kGolden64);
    }

    double uniform(std::uint64_t counter) const noexcept { return to_unit_double(word(counter)); }

private:
    std::uint64_t base_;
};

// Sequential splitmix64 generator for test fixtures and strategy sampling.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += kGolden64;
        return mix64(state_);
    }

    double uniform() noexcept { return to_unit_double(next()); }  // [0, 1)

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) noexcept { return next() % n; }

    int sign() noexcept { return (next() & 1u) ? +1 : -1; }

private:
    std::uint64_t state_;
};

}  // namespace bell
