#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace infodesign {

inline constexpr const char* kVersion = "0.1.0";

// Default tolerances: probability arithmetic vs. mean comparisons.
struct Tolerances {
    double prob = 1e-12;
    double mean = 1e-9;
};

inline constexpr Tolerances kDefaultTol{};

// Binary entropy in nats, with the 0*log(0) = 0 convention.
inline double h_bin(double q) {
    double s = 0.0;
    if (q > 0.0) s -= q * std::log(q);
    if (q < 1.0) s -= (1.0 - q) * std::log(1.0 - q);
    return s;
}

// KL(Bern(q) || Bern(mu)) in nats, 0*log(0) = 0. Requires mu in (0,1).
inline double kl_bern(double q, double mu) {
    double s = 0.0;
    if (q > 0.0) s += q * std::log(q / mu);
    if (q < 1.0) s += (1.0 - q) * std::log((1.0 - q) / (1.0 - mu));
    return s;
}

// Deterministic, platform-independent RNG (splitmix64). Used wherever a
// seeded stream must reproduce byte-identical output.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi] inclusive.
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

inline double inf() { return std::numeric_limits<double>::infinity(); }

}  // namespace infodesign
