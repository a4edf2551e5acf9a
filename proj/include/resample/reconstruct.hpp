#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "resample/sampling.hpp"
#include "resample/spline.hpp"

namespace resample::reconstruct {

enum class ImatTransform { Dft, Dct2 };

// Iteration parameters for imat/imati. beta <= 0 selects the automatic
// initial threshold: the maximum transform magnitude of the zero-filled
// observation.
struct ImatParams {
    double lambda = 1.0;         // relaxation, in (0, 2)
    double beta = 0.0;           // initial threshold; <= 0 means automatic
    double alpha = 0.05;         // per-iteration exponential decay
    int iterations = 300;
    ImatTransform transform = ImatTransform::Dft;
    spline::Boundary spline_boundary = spline::Boundary::NotAKnot;  // imati only
};

// Classical low-pass recovery of a zero-filled sampled frame: scale by
// 1/rate, then brick-wall at cutoff rate * 0.5.
Eigen::VectorXd recover_lowpass(const Eigen::Ref<const Eigen::VectorXd>& sampled,
                                const sampling::SampleMask& mask);

// Iterative method with adaptive thresholding. Starting from zero, each
// iteration k applies the relaxed data-consistency step
// x += lambda * M(y - x) (M keeps only mask indices), then hard-thresholds
// transform coefficients below beta * exp(-alpha * k). Kept indices are
// overwritten with their observed values at the end.
Eigen::VectorXd imat(const Eigen::Ref<const Eigen::VectorXd>& sampled,
                     const sampling::SampleMask& mask, const ImatParams& params);

// IMAT variant whose data-consistency step spreads the masked residual to
// all indices by cubic-spline interpolation over the kept positions.
// Requires >= 4 kept indices.
Eigen::VectorXd imati(const Eigen::Ref<const Eigen::VectorXd>& sampled,
                      const sampling::SampleMask& mask, const ImatParams& params);

// Real test signal with exactly k active positive-frequency DFT bins (2k
// nonzero bins total by conjugate symmetry). Bins are drawn from
// [1, n/2 - 1]; amplitudes are uniform in [-1, 1] excluding (-0.1, 0.1).
// Throws InvalidSparsity if k >= n/2 or k < 0.
Eigen::VectorXd sparse_test_signal(int n, int k, std::uint64_t seed);

}  // namespace resample::reconstruct
