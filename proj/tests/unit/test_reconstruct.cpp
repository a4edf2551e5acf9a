#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "resample/errors.hpp"
#include "resample/fft.hpp"
#include "resample/metrics.hpp"
#include "resample/reconstruct.hpp"
#include "resample/rng.hpp"
#include "resample/sampling.hpp"

using resample::metrics::snr_db;
using resample::reconstruct::imat;
using resample::reconstruct::imati;
using resample::reconstruct::ImatParams;
using resample::reconstruct::ImatTransform;
using resample::reconstruct::recover_lowpass;
using resample::reconstruct::sparse_test_signal;
using resample::sampling::apply_mask;
using resample::sampling::random_mask;
using resample::sampling::SampleMask;
using resample::sampling::uniform_mask;

TEST_CASE("low-pass recovery at full rate is the exact identity") {
    const Eigen::VectorXd x = test_helpers::bin_tone(1024, 100, 0.7, 0.5);
    const SampleMask m = uniform_mask(1024, 1.0);
    const Eigen::VectorXd y = recover_lowpass(apply_mask(x, m), m);
    CHECK((y - x).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("uniform half-rate recovery restores an in-band tone") {
    // Bin 102 of 1024 is 0.0996 of the sample rate, inside the 0.25 band
    // left by half-rate sampling.
    const Eigen::VectorXd x = test_helpers::bin_tone(1024, 102, 0.8, 1.1);
    const SampleMask m = uniform_mask(1024, 0.5);
    const Eigen::VectorXd y = recover_lowpass(apply_mask(x, m), m);
    CHECK(snr_db(x, y) > 40.0);
}

TEST_CASE("out-of-band tone aliases instead of recovering") {
    // Bin 410 is 0.4 of the sample rate: beyond the 0.25 recoverable band.
    const Eigen::VectorXd x = test_helpers::bin_tone(1024, 410, 0.8, 0.0);
    const SampleMask m = uniform_mask(1024, 0.5);
    const Eigen::VectorXd y = recover_lowpass(apply_mask(x, m), m);
    CHECK(snr_db(x, y) < 1.0);
}

TEST_CASE("sampled-domain gain compensation keeps amplitude unbiased") {
    const Eigen::VectorXd x = test_helpers::bin_tone(1024, 50, 1.0, 0.0);
    const SampleMask m = uniform_mask(1024, 0.25);
    const Eigen::VectorXd y = recover_lowpass(apply_mask(x, m), m);
    // Peak amplitude approximately preserved (not scaled by the rate).
    CHECK(y.cwiseAbs().maxCoeff() == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("recovery of a 1-sparse cosine spectrum from full sampling is fast") {
    // With everything kept, the iteration converges geometrically.
    const Eigen::VectorXd x = test_helpers::bin_tone(256, 30, 1.0, 0.0);
    const SampleMask m = uniform_mask(256, 1.0);
    ImatParams p;
    p.iterations = 10;
    p.transform = ImatTransform::Dft;
    const Eigen::VectorXd y = imat(apply_mask(x, m), m, p);
    CHECK(snr_db(x, y) > 100.0);
}

TEST_CASE("sparse spectra reconstruct from half of their samples") {
    const Eigen::VectorXd x = sparse_test_signal(256, 8, 11);
    const SampleMask m = random_mask(256, 0.5, 4);
    ImatParams p;
    const Eigen::VectorXd y = imat(apply_mask(x, m), m, p);
    CHECK(snr_db(x, y) > 40.0);
}

TEST_CASE("zero input is a fixed point of the sparse iteration") {
    const SampleMask m = random_mask(128, 0.5, 3);
    const Eigen::VectorXd y = imat(Eigen::VectorXd::Zero(128), m, ImatParams{});
    CHECK(y.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kept samples are copied through verbatim") {
    const Eigen::VectorXd x = sparse_test_signal(128, 6, 2);
    const SampleMask m = random_mask(128, 0.4, 9);
    const Eigen::VectorXd sampled = apply_mask(x, m);
    ImatParams p;
    p.iterations = 3;  // far from converged; consistency must still hold
    const Eigen::VectorXd y = imat(sampled, m, p);
    for (int idx : m.kept) {
        CHECK(y[idx] == sampled[idx]);
    }
}

TEST_CASE("the cosine-basis variant also recovers sparse content") {
    // Build a signal sparse in the cosine basis instead.
    Eigen::VectorXd coef = Eigen::VectorXd::Zero(256);
    coef[3] = 1.0;
    coef[40] = -0.7;
    coef[90] = 0.4;
    const Eigen::VectorXd x = resample::fft::idct2(coef);
    const SampleMask m = random_mask(256, 0.5, 21);
    ImatParams p;
    p.transform = ImatTransform::Dct2;
    const Eigen::VectorXd y = imat(apply_mask(x, m), m, p);
    CHECK(snr_db(x, y) > 40.0);
}

TEST_CASE("iteration parameters are validated") {
    const SampleMask m = random_mask(128, 0.5, 1);
    const Eigen::VectorXd z = Eigen::VectorXd::Zero(128);
    ImatParams p;
    p.lambda = 0.0;
    CHECK_THROWS_AS((void)imat(z, m, p), resample::InvalidSpec);
    p.lambda = 2.0;
    CHECK_THROWS_AS((void)imat(z, m, p), resample::InvalidSpec);
    p = ImatParams{};
    p.alpha = -0.1;
    CHECK_THROWS_AS((void)imat(z, m, p), resample::InvalidSpec);
    p = ImatParams{};
    p.iterations = 0;
    CHECK_THROWS_AS((void)imat(z, m, p), resample::InvalidSpec);
}

TEST_CASE("interpolated variant equals the plain one at full rate") {
    // With every sample kept, the interpolation step reduces to the same
    // residual injection, so the two iterations coincide.
    const Eigen::VectorXd x = sparse_test_signal(256, 10, 5);
    const SampleMask m = uniform_mask(256, 1.0);
    ImatParams p;
    p.iterations = 50;
    const Eigen::VectorXd a = imat(apply_mask(x, m), m, p);
    const Eigen::VectorXd b = imati(apply_mask(x, m), m, p);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("interpolated variant fixes zero and respects consistency") {
    const SampleMask m = random_mask(128, 0.5, 13);
    const Eigen::VectorXd z = imati(Eigen::VectorXd::Zero(128), m, ImatParams{});
    CHECK(z.cwiseAbs().maxCoeff() == 0.0);

    const Eigen::VectorXd x = sparse_test_signal(128, 4, 8);
    const Eigen::VectorXd sampled = apply_mask(x, m);
    ImatParams p;
    p.iterations = 5;
    const Eigen::VectorXd y = imati(sampled, m, p);
    for (int idx : m.kept) {
        CHECK(y[idx] == sampled[idx]);
    }
}

TEST_CASE("interpolated variant converges on smooth low-band content") {
    // Ten random smooth signals (tones well below 0.05 of the sample rate);
    // the interpolation step is reliable when the kept grid oversamples the
    // content, and the iteration should end distinctly above 5 dB.
    resample::rng::SplitMix64 gen(77);
    for (int trial = 0; trial < 10; ++trial) {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(1024);
        for (int t = 0; t < 5; ++t) {
            const int bin = 1 + static_cast<int>(gen.below(50));  // <= 0.049
            const double amp = 0.2 + 0.8 * gen.uniform01();
            const double phase = 2.0 * std::acos(-1.0) * gen.uniform01();
            x += test_helpers::bin_tone(1024, bin, amp, phase);
        }
        const SampleMask m = random_mask(1024, 0.25, 1000 + trial);
        const Eigen::VectorXd y = imati(apply_mask(x, m), m, ImatParams{});
        CHECK(snr_db(x, y) > 5.0);
    }
}

TEST_CASE("interpolated variant needs four kept samples") {
    SampleMask m;
    m.frame_len = 64;
    m.kept = {3, 17, 40};
    m.rate = 3.0 / 64.0;
    CHECK_THROWS_AS((void)imati(Eigen::VectorXd::Zero(64), m, ImatParams{}),
                    resample::TooFewPoints);
}

TEST_CASE("synthetic sparse signals match their reference draws") {
    const Eigen::VectorXd x = sparse_test_signal(1024, 64, 7);
    REQUIRE(x.size() == 1024);
    CHECK(x[0] == doctest::Approx(-7.436309151379).epsilon(1e-9));
    CHECK(x[1] == doctest::Approx(-1.816010515955).epsilon(1e-9));
    CHECK(x[2] == doctest::Approx(-0.050041694998).epsilon(1e-9));
    CHECK(x[3] == doctest::Approx(-1.599300573825).epsilon(1e-9));
    CHECK(x[4] == doctest::Approx(0.237749967899).epsilon(1e-9));
}

TEST_CASE("synthetic sparse spectra occupy exactly 2k bins") {
    for (int k : {1, 8, 64}) {
        const Eigen::VectorXd x = sparse_test_signal(1024, k, 3);
        const Eigen::VectorXcd spec = resample::fft::forward_real(x);
        int nonzero = 0;
        for (int i = 0; i < 1024; ++i) {
            if (std::abs(spec[i]) > 1e-6) ++nonzero;
        }
        CHECK(nonzero == 2 * k);
        // Real signal: bins 0 and n/2 never used by construction.
        CHECK(std::abs(spec[0]) < 1e-9);
        CHECK(std::abs(spec[512]) < 1e-9);
    }
}

TEST_CASE("zero sparsity gives the zero signal") {
    const Eigen::VectorXd x = sparse_test_signal(512, 0, 1);
    CHECK(x.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("sparsity bounds are enforced") {
    CHECK_THROWS_AS((void)sparse_test_signal(512, -1, 0), resample::InvalidSparsity);
    CHECK_THROWS_AS((void)sparse_test_signal(512, 256, 0), resample::InvalidSparsity);
    CHECK_NOTHROW((void)sparse_test_signal(512, 255, 0));
    CHECK_THROWS_AS((void)sparse_test_signal(500, 8, 0), resample::NonPowerOfTwoLength);
}
