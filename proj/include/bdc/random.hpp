#pragma once

// Per-label random streams. The stream of label i depends only on
// (master seed, encoded label), so independent particles never share draws
// and two systems run on the same seed consume identical randomness.

#include <cstdint>
#include <limits>
#include <random>

#include "bdc/labels.hpp"

namespace bdc {

/// SplitMix64: 64-bit state, one add and a finaliser per draw. Satisfies
/// UniformRandomBitGenerator so the standard distributions apply.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state = 0) noexcept : state_(state) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        return mix(z);
    }

    static std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Hash of (master seed, stream tag, label bytes) used as a stream key.
std::uint64_t stream_key(std::uint64_t master_seed, std::uint32_t tag, const Label& label);

/// Randomness owned by one particle: Gaussian increments for its Brownian
/// motion, and a rate-gamma_bar clock with uniform marks on [0, gamma_bar].
class ParticleStream {
public:
    ParticleStream(std::uint64_t master_seed, const Label& label);

    double gaussian() { return normal_(gauss_engine_); }
    /// Exp(gamma_bar) waiting time to the next potential event.
    double waiting_time(double gamma_bar);
    /// Uniform mark on [0, gamma_bar).
    double mark(double gamma_bar);

private:
    SplitMix64 gauss_engine_;
    SplitMix64 clock_engine_;
    std::normal_distribution<double> normal_;
};

class RandomDriver {
public:
    explicit RandomDriver(std::uint64_t master_seed) : seed_(master_seed) {}
    std::uint64_t seed() const noexcept { return seed_; }
    ParticleStream stream(const Label& label) const { return ParticleStream(seed_, label); }

private:
    std::uint64_t seed_;
};

}  // namespace bdc
