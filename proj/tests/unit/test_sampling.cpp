#include <doctest.h>

#include <set>
#include <vector>

#include "resample/errors.hpp"
#include "resample/sampling.hpp"

using resample::sampling::apply_mask;
using resample::sampling::random_mask;
using resample::sampling::SampleMask;
using resample::sampling::uniform_mask;

TEST_CASE("uniform half rate keeps every other index starting at 1") {
    const SampleMask m = uniform_mask(8, 0.5);
    CHECK(m.kept == std::vector<int>{1, 3, 5, 7});
    CHECK(m.frame_len == 8);
    CHECK(m.rate == 0.5);
}

TEST_CASE("uniform full rate keeps everything") {
    const SampleMask m = uniform_mask(16, 1.0);
    REQUIRE(m.kept.size() == 16);
    for (int i = 0; i < 16; ++i) CHECK(m.kept[i] == i);
}

TEST_CASE("uniform 0.75 drops one index per four") {
    const SampleMask m = uniform_mask(8, 0.75);
    CHECK(m.kept == std::vector<int>{1, 2, 3, 5, 6, 7});
}

TEST_CASE("uniform keep count is within one of rate times length") {
    for (int len : {8, 100, 1024, 4096}) {
        for (double rate : {0.1, 0.25, 1.0 / 3.0, 0.5, 0.7, 0.9}) {
            const SampleMask m = uniform_mask(len, rate);
            const double expected = rate * len;
            CHECK(std::abs(static_cast<double>(m.kept.size()) - expected) <= 1.0);
            // Sorted and unique by construction.
            for (std::size_t i = 1; i < m.kept.size(); ++i) {
                CHECK(m.kept[i] > m.kept[i - 1]);
            }
        }
    }
}

TEST_CASE("uniform gaps alternate between the two nearest integers to 1/rate") {
    const SampleMask m = uniform_mask(4096, 0.3);
    REQUIRE(m.kept.size() >= 2);
    for (std::size_t i = 1; i < m.kept.size(); ++i) {
        const int gap = m.kept[i] - m.kept[i - 1];
        CHECK(gap >= 3);  // floor(1/0.3)
        CHECK(gap <= 4);  // ceil(1/0.3)
    }
}

TEST_CASE("uniform rate bounds are enforced") {
    CHECK_THROWS_AS((void)uniform_mask(8, 0.0), resample::InvalidRate);
    CHECK_THROWS_AS((void)uniform_mask(8, 1.5), resample::InvalidRate);
    CHECK_THROWS_AS((void)uniform_mask(8, -0.1), resample::InvalidRate);
    CHECK_THROWS_AS((void)uniform_mask(0, 0.5), resample::InvalidSpec);
}

TEST_CASE("random mask reference draws") {
    const SampleMask a = random_mask(16, 0.5, 42);
    CHECK(a.kept == std::vector<int>{1, 2, 4, 5, 6, 11, 12, 14});
    const SampleMask b = random_mask(8, 0.5, 7);
    CHECK(b.kept == std::vector<int>{2, 4, 6, 7});
}

TEST_CASE("random mask draws exactly round(rate*len) indices") {
    for (int len : {16, 100, 1024}) {
        for (double rate : {0.1, 0.25, 0.5, 0.77}) {
            const SampleMask m = random_mask(len, rate, 123);
            CHECK(static_cast<long>(m.kept.size()) == std::llround(rate * len));
            std::set<int> uniq(m.kept.begin(), m.kept.end());
            CHECK(uniq.size() == m.kept.size());
            CHECK(*m.kept.begin() >= 0);
            CHECK(m.kept.back() < len);
            for (std::size_t i = 1; i < m.kept.size(); ++i) {
                CHECK(m.kept[i] > m.kept[i - 1]);
            }
        }
    }
}

TEST_CASE("random mask at full rate keeps everything") {
    const SampleMask m = random_mask(32, 1.0, 5);
    REQUIRE(m.kept.size() == 32);
    for (int i = 0; i < 32; ++i) CHECK(m.kept[i] == i);
}

TEST_CASE("random mask is a pure function of its arguments") {
    const SampleMask a = random_mask(256, 0.3, 9);
    const SampleMask b = random_mask(256, 0.3, 9);
    CHECK(a.kept == b.kept);
    const SampleMask c = random_mask(256, 0.3, 10);
    CHECK(a.kept != c.kept);
}

TEST_CASE("random mask needs at least two kept samples") {
    CHECK_THROWS_AS((void)random_mask(8, 0.1, 0), resample::TooFewSamples);  // round(0.8) = 1
    CHECK_THROWS_AS((void)random_mask(4, 0.1, 0), resample::TooFewSamples);
    CHECK_NOTHROW((void)random_mask(8, 0.25, 0));  // round(2.0) = 2
}

TEST_CASE("applying a mask zeroes the dropped positions only") {
    Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(8, 1.0, 8.0);
    const SampleMask m = uniform_mask(8, 0.5);  // keeps {1,3,5,7}
    const Eigen::VectorXd y = apply_mask(x, m);
    REQUIRE(y.size() == 8);
    CHECK(y[0] == 0.0);
    CHECK(y[1] == 2.0);
    CHECK(y[2] == 0.0);
    CHECK(y[3] == 4.0);
    CHECK(y[4] == 0.0);
    CHECK(y[5] == 6.0);
    CHECK(y[6] == 0.0);
    CHECK(y[7] == 8.0);
}

TEST_CASE("applying a mask checks the frame length") {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(16);
    const SampleMask m = uniform_mask(8, 0.5);
    CHECK_THROWS_AS((void)apply_mask(x, m), resample::LengthMismatch);
}
