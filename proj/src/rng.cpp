#include "resample/rng.hpp"

#include <algorithm>
#include <numeric>

namespace resample::rng {

std::vector<int> sample_without_replacement(int n, int k, std::uint64_t seed) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    SplitMix64 gen(seed);
    for (int i = 0; i < k; ++i) {
        const auto j = i + static_cast<int>(gen.below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace resample::rng
