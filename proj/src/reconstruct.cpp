#include "resample/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "resample/errors.hpp"
#include "resample/fft.hpp"
#include "resample/filters.hpp"
#include "resample/rng.hpp"

namespace resample::reconstruct {
namespace {

void check_params(const ImatParams& p) {
    if (!(p.lambda > 0.0 && p.lambda < 2.0)) {
        throw InvalidSpec("imat lambda must be in (0, 2)");
    }
    if (!(p.alpha > 0.0)) {
        throw InvalidSpec("imat alpha must be positive");
    }
    if (p.iterations < 1) {
        throw InvalidSpec("imat iterations must be >= 1");
    }
}

double auto_beta(const Eigen::Ref<const Eigen::VectorXd>& y, ImatTransform transform) {
    if (transform == ImatTransform::Dft) {
        return fft::forward_real(y).cwiseAbs().maxCoeff();
    }
    return fft::dct2(y).cwiseAbs().maxCoeff();
}

// Hard-threshold the transform coefficients of x below level, in place.
void threshold_in_domain(Eigen::VectorXd& x, ImatTransform transform, double level) {
    if (transform == ImatTransform::Dft) {
        Eigen::VectorXcd spec = fft::forward_real(x);
        for (Eigen::Index i = 0; i < spec.size(); ++i) {
            if (std::abs(spec[i]) < level) spec[i] = 0.0;
        }
        x = fft::inverse(spec).real();
    } else {
        Eigen::VectorXd coeffs = fft::dct2(x);
        for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
            if (std::abs(coeffs[i]) < level) coeffs[i] = 0.0;
        }
        x = fft::idct2(coeffs);
    }
}

}  // namespace

Eigen::VectorXd recover_lowpass(const Eigen::Ref<const Eigen::VectorXd>& sampled,
                                const sampling::SampleMask& mask) {
    if (sampled.size() != mask.frame_len) {
        throw LengthMismatch("sampled length " + std::to_string(sampled.size()) +
                             " != mask frame_len " + std::to_string(mask.frame_len));
    }
    // Zero-filling at rate r attenuates the baseband image by r; rescale,
    // then remove the spectral images above the new Nyquist.
    return filters::fft_lowpass(sampled / mask.rate, mask.rate * 0.5);
}

Eigen::VectorXd imat(const Eigen::Ref<const Eigen::VectorXd>& sampled,
                     const sampling::SampleMask& mask, const ImatParams& params) {
    check_params(params);
    if (mask.kept.empty()) {
        throw TooFewSamples("imat requires a non-empty mask");
    }
    if (sampled.size() != mask.frame_len) {
        throw LengthMismatch("sampled length != mask frame_len");
    }

    const double beta = params.beta > 0.0 ? params.beta : auto_beta(sampled, params.transform);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(sampled.size());
    for (int k = 0; k < params.iterations; ++k) {
        for (int i : mask.kept) {
            x[i] += params.lambda * (sampled[i] - x[i]);
        }
        threshold_in_domain(x, params.transform, beta * std::exp(-params.alpha * k));
    }
    for (int i : mask.kept) {
        x[i] = sampled[i];
    }
    return x;
}

Eigen::VectorXd imati(const Eigen::Ref<const Eigen::VectorXd>& sampled,
                      const sampling::SampleMask& mask, const ImatParams& params) {
    check_params(params);
    if (mask.kept.size() < 4) {
        throw TooFewPoints("imati requires >= 4 kept indices");
    }
    if (sampled.size() != mask.frame_len) {
        throw LengthMismatch("sampled length != mask frame_len");
    }

    const double beta = params.beta > 0.0 ? params.beta : auto_beta(sampled, params.transform);
    const int n = static_cast<int>(sampled.size());
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd residual(static_cast<Eigen::Index>(mask.kept.size()));
    for (int k = 0; k < params.iterations; ++k) {
        for (std::size_t j = 0; j < mask.kept.size(); ++j) {
            const int i = mask.kept[j];
            residual[static_cast<Eigen::Index>(j)] = sampled[i] - x[i];
        }
        x += params.lambda *
             spline::spline_interpolate(mask.kept, residual, n, params.spline_boundary);
        threshold_in_domain(x, params.transform, beta * std::exp(-params.alpha * k));
    }
    for (int i : mask.kept) {
        x[i] = sampled[i];
    }
    return x;
}

Eigen::VectorXd sparse_test_signal(int n, int k, std::uint64_t seed) {
    if (k < 0 || k >= n / 2) {
        throw InvalidSparsity("need 0 <= k < n/2, got k=" + std::to_string(k) +
                              ", n=" + std::to_string(n));
    }
    if (k == 0) {
        return Eigen::VectorXd::Zero(n);
    }

    // Support lives in [1, n/2 - 1]: DC and Nyquist are excluded so every
    // active bin has a distinct conjugate partner (exactly 2k nonzero bins).
    // One generator stream drives both the bin draw and the amplitudes, so
    // the whole signal is a pure function of (n, k, seed).
    rng::SplitMix64 gen(seed);
    std::vector<int> pool(static_cast<std::size_t>(n / 2 - 1));
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int>(i) + 1;
    for (int i = 0; i < k; ++i) {
        const auto j =
            i + static_cast<int>(gen.below(static_cast<std::uint64_t>(n / 2 - 1 - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    std::vector<int> bins(pool.begin(), pool.begin() + k);
    std::sort(bins.begin(), bins.end());

    Eigen::VectorXcd spec = Eigen::VectorXcd::Zero(n);
    for (int bin : bins) {
        // Uniform in [-1, 1] excluding (-0.1, 0.1).
        const double magnitude = 0.1 + 0.9 * gen.uniform01();
        const double amp = (gen.next() & 1) ? -magnitude : magnitude;
        // n/2 scaling makes each bin contribute a unit-order cosine.
        spec[bin] = amp * (n / 2.0);
        spec[n - bin] = amp * (n / 2.0);
    }
    return fft::inverse(spec).real();
}

}  // namespace resample::reconstruct
