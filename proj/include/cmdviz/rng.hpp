#pragma once

#include <cstdint>

namespace cmdviz {

// splitmix64 stream. Hand-rolled so output is identical across platforms
// and standard-library versions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

    // Standard normal via Box-Muller.
    double next_gaussian();

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Mixes a seed with counters so per-(t, j) streams are order-independent.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b);

}  // namespace cmdviz
