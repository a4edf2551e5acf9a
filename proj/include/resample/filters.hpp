#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace resample::filters {

enum class FilterKind { FftBrickwall, Fir, Iir };
enum class FirWindow { Rectangular, Hamming, Blackman, Kaiser };
enum class IirDesign { Butterworth, Chebyshev1 };

// Declarative low-pass description. cutoff is a normalized frequency in
// (0, 0.5], a fraction of the sampling rate (0.5 = Nyquist).
struct FilterSpec {
    FilterKind kind = FilterKind::FftBrickwall;
    double cutoff = 0.25;
    FirWindow fir_window = FirWindow::Hamming;
    int fir_taps = 63;             // odd (symmetric linear-phase)
    double kaiser_beta = 8.6;
    IirDesign iir_design = IirDesign::Butterworth;
    int iir_order = 6;
    double iir_ripple_db = 1.0;    // Chebyshev-I passband ripple
};

// One second-order section; a0 is normalized to 1.
struct Biquad {
    double b0, b1, b2;
    double a1, a2;
};

struct DesignedFilter {
    FilterSpec spec;
    Eigen::VectorXd fir_coeffs;    // Fir only
    std::vector<Biquad> biquads;   // Iir only
};

// Zeroes DFT bins with |normalized frequency| > cutoff (the bin exactly at
// cutoff is retained) and returns the real part of the inverse transform.
// Length must be a power of two. Idempotent; never increases energy.
Eigen::VectorXd fft_lowpass(const Eigen::Ref<const Eigen::VectorXd>& frame, double cutoff);

// Windowed-sinc design h[k] = w[k] * sinc(2*cutoff*(k-M)), M = (taps-1)/2,
// normalized to unit DC gain; coefficients exactly symmetric. taps must be
// odd; taps == 1 gives the identity filter [1.0]. Throws InvalidSpec.
DesignedFilter design_fir(const FilterSpec& spec);

// Analog Butterworth / Chebyshev-I prototype -> pre-warp -> bilinear
// transform -> cascade of second-order sections (odd orders carry one
// degenerate first-order section). Requires cutoff < 0.5: the bilinear
// pre-warp diverges at Nyquist. Throws InvalidSpec.
DesignedFilter design_iir(const FilterSpec& spec);

// FIR: linear convolution with zero-padded edges, output advanced by the
// group delay M so it is time-aligned with the input (same length).
// IIR: causal direct-form-II-transposed cascade with fresh state per call.
Eigen::VectorXd apply_filter(const Eigen::Ref<const Eigen::VectorXd>& x,
                             const DesignedFilter& f);

// Frequency response H(e^{j*2*pi*freq}) of a designed filter at a normalized
// frequency in [0, 0.5].
std::complex<double> response(const DesignedFilter& f, double freq);

}  // namespace resample::filters
