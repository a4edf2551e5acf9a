#include <doctest.h>

#include <cmath>
#include <limits>
#include <thread>

#include "resample/errors.hpp"
#include "resample/metrics.hpp"

using resample::metrics::format_metric;
using resample::metrics::median;
using resample::metrics::snr_db;
using resample::metrics::timed;

TEST_CASE("a tenth of amplitude error is 20 dB") {
    Eigen::VectorXd ref(2), est(2);
    ref << 1.0, 0.0;
    est << 0.9, 0.0;
    CHECK(snr_db(ref, est) == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("an exact match is infinite") {
    Eigen::VectorXd ref(3);
    ref << 0.3, -0.2, 0.9;
    const double v = snr_db(ref, ref);
    CHECK(std::isinf(v));
    CHECK(v > 0.0);
}

TEST_CASE("the all-zero estimate scores 0 dB") {
    Eigen::VectorXd ref(4);
    ref << 0.5, -0.5, 0.25, -0.25;
    CHECK(snr_db(ref, Eigen::VectorXd::Zero(4)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("the score is invariant under common scaling") {
    Eigen::VectorXd ref(5), est(5);
    ref << 1.0, 2.0, -1.0, 0.5, 0.0;
    est << 0.9, 2.2, -1.1, 0.4, 0.1;
    const double base = snr_db(ref, est);
    const double scaled = snr_db(3.0 * ref, 3.0 * est);
    CHECK(scaled == doctest::Approx(base).epsilon(1e-9));
}

TEST_CASE("reference and estimate must agree in length") {
    CHECK_THROWS_AS((void)snr_db(Eigen::VectorXd::Zero(4), Eigen::VectorXd::Zero(5)),
                    resample::LengthMismatch);
}

TEST_CASE("a silent reference cannot be scored") {
    CHECK_THROWS_AS((void)snr_db(Eigen::VectorXd::Zero(4), Eigen::VectorXd::Ones(4)),
                    resample::ZeroReference);
    Eigen::VectorXd empty;
    CHECK_THROWS_AS((void)snr_db(empty, empty), resample::ZeroReference);
}

TEST_CASE("median of odd and even counts") {
    CHECK(median({3.0}) == 3.0);
    CHECK(median({3.0, 1.0, 2.0}) == 2.0);
    CHECK(median({4.0, 1.0, 3.0, 2.0}) == doctest::Approx(2.5));
    CHECK(median({1.0, 1.0, 9.0, 9.0}) == doctest::Approx(5.0));
}

TEST_CASE("metric formatting is locale-free and fixed width") {
    CHECK(format_metric(1.5) == "1.500000");
    CHECK(format_metric(0.0) == "0.000000");
    CHECK(format_metric(-12.3456789) == "-12.345679");
    CHECK(format_metric(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("timing wraps a callable transparently") {
    const auto [value, seconds] = timed([] {
        std::this_thread::sleep_for(std::chrono::milliseconds(10));
        return 42;
    });
    CHECK(value == 42);
    CHECK(seconds >= 0.005);
    CHECK(seconds < 5.0);
}
