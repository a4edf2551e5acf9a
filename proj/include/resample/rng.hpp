#pragma once

#include <cstdint>
#include <vector>

namespace resample::rng {

// splitmix64: tiny, well-mixed 64-bit generator with a portable, fully
// specified update. Used everywhere randomness is needed so identical seeds
// give identical streams on every platform (std:: distributions do not
// guarantee that).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 significant bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, bound). Modulo bias is < bound/2^64, far below
    // anything the benchmark can resolve.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// k distinct values from {0, ..., n-1}, sorted ascending. Partial
// Fisher-Yates over an index table: after k swaps the prefix is the sample.
std::vector<int> sample_without_replacement(int n, int k, std::uint64_t seed);

}  // namespace resample::rng
