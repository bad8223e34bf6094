#pragma once
// Seeded RNG for deterministic simulation. All draws go through explicit
// helpers (no std::*_distribution) so a given seed produces the same
// byte-identical stream on every standard library and across runs.

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace robomendel {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed), base_seed_(seed) {}

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Rejection sampling keeps the draw unbiased.
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % n;
    }

    // Gaussian via Box-Muller; the spare value is cached.
    double normal(double mean, double sd) {
        if (have_spare_) {
            have_spare_ = false;
            return mean + sd * spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return mean + sd * r * std::cos(theta);
    }

    int binomial(int n, double p) {
        int k = 0;
        for (int i = 0; i < n; ++i) k += bernoulli(p) ? 1 : 0;
        return k;
    }

    // Deterministic child stream, e.g. one per (cycle, design).
    Rng fork(std::string_view label) const {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ base_seed_;
        for (const char c : label) {
            h ^= static_cast<std::uint8_t>(c);
            h *= 0x100000001b3ULL;
        }
        return Rng(h);
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t base_seed_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace robomendel
