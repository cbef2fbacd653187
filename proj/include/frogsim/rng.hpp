#pragma once

#include <cstdint>
#include <cmath>
#include <stdexcept>

namespace frog {

// SplitMix64 stream (Steele, Lea, Flood 2014; Vigna's fixed-increment
// variant). 64-bit state, equidistributed output, cheap enough for the
// per-site sampling in the world step.
inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Per-replication seed: avalanche-mix of the base seed and the replication
// index. Same (base, index) gives the same stream no matter how replications
// are scheduled.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    return mix64(base + kGoldenGamma * (index + 1));
}

class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~0ULL; }
    result_type operator()() { return next_u64(); }

    std::uint64_t next_u64() {
        return mix64(state_ += kGoldenGamma);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_double() < p; }

    // Exact Binomial(c, p) draw. Small counts use per-trial draws, larger
    // counts CDF inversion on the smaller tail; marginal distribution is
    // exact either way.
    std::int64_t binomial(std::int64_t c, double p) {
        if (c < 0) throw std::invalid_argument("binomial: negative count");
        if (p >= 1.0) return c;
        if (p <= 0.0) return 0;
        if (c <= 32) {
            std::int64_t k = 0;
            for (std::int64_t i = 0; i < c; ++i) k += bernoulli(p);
            return k;
        }
        if (p <= 0.5) return inversion(c, p);
        return c - inversion(c, 1.0 - p);
    }

private:
    // CDF inversion for q <= 1/2; expected work is c*q + O(1) iterations.
    std::int64_t inversion(std::int64_t c, double q) {
        const double u = next_double();
        double pmf = std::exp(static_cast<double>(c) * std::log1p(-q));
        double cdf = pmf;
        const double ratio = q / (1.0 - q);
        std::int64_t k = 0;
        while (u >= cdf && k < c) {
            pmf *= ratio * static_cast<double>(c - k) / static_cast<double>(k + 1);
            ++k;
            cdf += pmf;
        }
        return k;
    }

    std::uint64_t state_;
};

}  // namespace frog
