#include <doctest.h>

#include <cmath>
#include <complex>

#include "helpers.hpp"
#include "resample/errors.hpp"
#include "resample/fft.hpp"
#include "resample/rng.hpp"

using resample::fft::dct2;
using resample::fft::forward;
using resample::fft::forward_real;
using resample::fft::idct2;
using resample::fft::inverse;

namespace {

// Direct orthonormal DCT-II, quadratic cost. Oracle for the fast path.
Eigen::VectorXd dct2_direct(const Eigen::VectorXd& x) {
    const auto n = x.size();
    Eigen::VectorXd out(n);
    const double pi = std::acos(-1.0);
    for (Eigen::Index k = 0; k < n; ++k) {
        double acc = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            acc += x[i] * std::cos(pi * (2.0 * i + 1.0) * k / (2.0 * n));
        }
        const double alpha = (k == 0) ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
        out[k] = alpha * acc;
    }
    return out;
}

}  // namespace

TEST_CASE("forward transform matches the quadratic-time definition") {
    resample::rng::SplitMix64 gen(7);
    for (int n : {2, 8, 64, 256}) {
        Eigen::VectorXd x(n);
        for (int i = 0; i < n; ++i) x[i] = gen.uniform01() * 2.0 - 1.0;
        const Eigen::VectorXcd fast = forward_real(x);
        const Eigen::VectorXcd slow = test_helpers::naive_dft(x);
        REQUIRE(fast.size() == slow.size());
        CHECK((fast - slow).cwiseAbs().maxCoeff() < 1e-10 * n);
    }
}

TEST_CASE("inverse undoes forward to near machine precision") {
    resample::rng::SplitMix64 gen(11);
    Eigen::VectorXcd x(1024);
    for (int i = 0; i < 1024; ++i) {
        x[i] = std::complex<double>(gen.uniform01() - 0.5, gen.uniform01() - 0.5);
    }
    const Eigen::VectorXcd back = inverse(forward(x));
    CHECK((back - x).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("single bin tone lands in exactly two bins") {
    const Eigen::VectorXd x = test_helpers::bin_tone(256, 10, 1.0, 0.0);
    const Eigen::VectorXcd spec = forward_real(x);
    // cos tone of unit amplitude: |X[10]| = |X[246]| = n/2.
    CHECK(std::abs(spec[10]) == doctest::Approx(128.0).epsilon(1e-9));
    CHECK(std::abs(spec[246]) == doctest::Approx(128.0).epsilon(1e-9));
    double rest = 0.0;
    for (int k = 0; k < 256; ++k) {
        if (k == 10 || k == 246) continue;
        rest = std::max(rest, std::abs(spec[k]));
    }
    CHECK(rest < 1e-10);
}

TEST_CASE("Parseval holds for the forward transform") {
    resample::rng::SplitMix64 gen(3);
    Eigen::VectorXd x(512);
    for (int i = 0; i < 512; ++i) x[i] = gen.uniform01() * 2.0 - 1.0;
    const Eigen::VectorXcd spec = forward_real(x);
    const double time_energy = x.squaredNorm();
    const double freq_energy = spec.squaredNorm() / 512.0;
    CHECK(freq_energy == doctest::Approx(time_energy).epsilon(1e-12));
}

TEST_CASE("non-power-of-two lengths are rejected") {
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(100);
    CHECK_THROWS_AS((void)forward(x), resample::NonPowerOfTwoLength);
    CHECK_THROWS_AS((void)inverse(x), resample::NonPowerOfTwoLength);
    Eigen::VectorXd r = Eigen::VectorXd::Zero(0);
    CHECK_THROWS_AS((void)forward_real(r), resample::NonPowerOfTwoLength);
}

TEST_CASE("fast cosine transform matches its direct form") {
    resample::rng::SplitMix64 gen(21);
    for (int n : {4, 32, 128}) {
        Eigen::VectorXd x(n);
        for (int i = 0; i < n; ++i) x[i] = gen.uniform01() * 2.0 - 1.0;
        const Eigen::VectorXd fast = dct2(x);
        const Eigen::VectorXd slow = dct2_direct(x);
        CHECK((fast - slow).cwiseAbs().maxCoeff() < 1e-12 * n);
    }
}

TEST_CASE("cosine transform is orthonormal") {
    resample::rng::SplitMix64 gen(5);
    Eigen::VectorXd x(256);
    for (int i = 0; i < 256; ++i) x[i] = gen.uniform01() * 2.0 - 1.0;
    const Eigen::VectorXd c = dct2(x);
    CHECK(c.squaredNorm() == doctest::Approx(x.squaredNorm()).epsilon(1e-12));
    const Eigen::VectorXd back = idct2(c);
    CHECK((back - x).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("constant signal concentrates in the zeroth cosine coefficient") {
    Eigen::VectorXd x = Eigen::VectorXd::Constant(64, 3.0);
    const Eigen::VectorXd c = dct2(x);
    CHECK(c[0] == doctest::Approx(3.0 * std::sqrt(64.0)).epsilon(1e-12));
    CHECK(c.tail(63).cwiseAbs().maxCoeff() < 1e-12);
}
