#include <doctest.h>

#include <set>

#include "resample/rng.hpp"

using resample::rng::SplitMix64;
using resample::rng::sample_without_replacement;

TEST_CASE("splitmix64 reference stream") {
    // First outputs for seed 0, from the published splitmix64 reference.
    SplitMix64 gen(0);
    CHECK(gen.next() == 0xE220A8397B1DCDAFULL);
    CHECK(gen.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(gen.next() == 0x06C45D188009454FULL);
}

TEST_CASE("uniform01 range and determinism") {
    SplitMix64 a(123);
    SplitMix64 b(123);
    for (int i = 0; i < 1000; ++i) {
        const double u = a.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        CHECK(u == b.uniform01());
    }
}

TEST_CASE("sample_without_replacement basic contract") {
    const auto sample = sample_without_replacement(100, 30, 42);
    REQUIRE(sample.size() == 30);
    std::set<int> unique(sample.begin(), sample.end());
    CHECK(unique.size() == 30);
    for (std::size_t i = 1; i < sample.size(); ++i) {
        CHECK(sample[i] > sample[i - 1]);
    }
    for (int v : sample) {
        CHECK(v >= 0);
        CHECK(v < 100);
    }
}

TEST_CASE("sample_without_replacement full draw is the identity set") {
    const auto sample = sample_without_replacement(16, 16, 9001);
    REQUIRE(sample.size() == 16);
    for (int i = 0; i < 16; ++i) {
        CHECK(sample[static_cast<std::size_t>(i)] == i);
    }
}

TEST_CASE("sample_without_replacement is a pure function of the seed") {
    CHECK(sample_without_replacement(1024, 256, 7) == sample_without_replacement(1024, 256, 7));
    CHECK(sample_without_replacement(1024, 256, 7) != sample_without_replacement(1024, 256, 8));
}
