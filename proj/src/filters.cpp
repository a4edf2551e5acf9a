#include "resample/filters.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "resample/errors.hpp"
#include "resample/fft.hpp"

namespace resample::filters {
namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double x) {
    if (x == 0.0) return 1.0;
    return std::sin(kPi * x) / (kPi * x);
}

// Modified Bessel function of the first kind, order zero, by power series.
// Converges to double precision within ~40 terms for any realistic beta.
double bessel_i0(double x) {
    const double half = x / 2.0;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= (half / k) * (half / k);
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum;
}

double window_value(FirWindow window, double kaiser_beta, int k, int taps) {
    if (taps == 1) return 1.0;
    const double n = static_cast<double>(taps - 1);
    const double t = static_cast<double>(k);
    switch (window) {
        case FirWindow::Rectangular:
            return 1.0;
        case FirWindow::Hamming:
            return 0.54 - 0.46 * std::cos(2.0 * kPi * t / n);
        case FirWindow::Blackman:
            return 0.42 - 0.5 * std::cos(2.0 * kPi * t / n) + 0.08 * std::cos(4.0 * kPi * t / n);
        case FirWindow::Kaiser: {
            const double r = 2.0 * t / n - 1.0;  // in [-1, 1]
            return bessel_i0(kaiser_beta * std::sqrt(std::max(0.0, 1.0 - r * r))) /
                   bessel_i0(kaiser_beta);
        }
    }
    return 1.0;
}

}  // namespace

Eigen::VectorXd fft_lowpass(const Eigen::Ref<const Eigen::VectorXd>& frame, double cutoff) {
    const Eigen::Index n = frame.size();
    if (cutoff <= 0.0) {
        throw InvalidSpec("cutoff must be positive, got " + std::to_string(cutoff));
    }
    if (cutoff >= 0.5) {
        // No representable frequency exceeds Nyquist; the pass is an exact
        // identity, so skip the transform round-trip (and its 1e-16 noise).
        if (!fft::is_power_of_two(n)) {
            throw NonPowerOfTwoLength("length " + std::to_string(n) + " is not a power of two");
        }
        return frame;
    }
    Eigen::VectorXcd spec = fft::forward_real(frame);

    // Bin k represents normalized frequency k/n for k <= n/2 and (k-n)/n
    // above; keep |f| <= cutoff with the boundary bin retained.
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index folded = (k <= n / 2) ? k : n - k;
        const double freq = static_cast<double>(folded) / static_cast<double>(n);
        if (freq > cutoff) spec[k] = 0.0;
    }
    return fft::inverse(spec).real();
}

DesignedFilter design_fir(const FilterSpec& spec) {
    if (spec.kind != FilterKind::Fir) {
        throw InvalidSpec("design_fir requires kind = Fir");
    }
    if (spec.fir_taps < 1 || spec.fir_taps % 2 == 0) {
        throw InvalidSpec("fir_taps must be odd and positive, got " +
                          std::to_string(spec.fir_taps));
    }
    if (!(spec.cutoff > 0.0 && spec.cutoff <= 0.5)) {
        throw InvalidSpec("cutoff must be in (0, 0.5]");
    }

    const int taps = spec.fir_taps;
    const int m = (taps - 1) / 2;
    Eigen::VectorXd h(taps);
    for (int k = 0; k <= m; ++k) {
        const double v = window_value(spec.fir_window, spec.kaiser_beta, k, taps) *
                         sinc(2.0 * spec.cutoff * (k - m));
        // Mirroring keeps the symmetry h[k] == h[taps-1-k] bit-exact.
        h[k] = v;
        h[taps - 1 - k] = v;
    }
    h /= h.sum();

    DesignedFilter out;
    out.spec = spec;
    out.fir_coeffs = std::move(h);
    return out;
}

DesignedFilter design_iir(const FilterSpec& spec) {
    if (spec.kind != FilterKind::Iir) {
        throw InvalidSpec("design_iir requires kind = Iir");
    }
    if (spec.iir_order < 1) {
        throw InvalidSpec("iir_order must be >= 1");
    }
    if (!(spec.cutoff > 0.0 && spec.cutoff < 0.5)) {
        throw InvalidSpec("iir cutoff must be in (0, 0.5): bilinear pre-warp diverges at Nyquist");
    }
    if (spec.iir_design == IirDesign::Chebyshev1 && !(spec.iir_ripple_db > 0.0)) {
        throw InvalidSpec("chebyshev ripple must be positive");
    }

    const int n = spec.iir_order;
    using cd = std::complex<double>;

    // Normalized (cutoff = 1 rad/s) analog prototype poles and overall gain.
    std::vector<cd> poles(static_cast<std::size_t>(n));
    double gain = 1.0;
    if (spec.iir_design == IirDesign::Butterworth) {
        for (int k = 0; k < n; ++k) {
            poles[static_cast<std::size_t>(k)] =
                std::polar(1.0, kPi * (2.0 * k + n + 1.0) / (2.0 * n));
        }
        gain = 1.0;
    } else {
        const double eps = std::sqrt(std::pow(10.0, spec.iir_ripple_db / 10.0) - 1.0);
        const double mu = std::asinh(1.0 / eps) / n;
        cd prod = 1.0;
        for (int k = 0; k < n; ++k) {
            const double theta = kPi * (2.0 * k + 1.0) / (2.0 * n);
            const cd p(-std::sinh(mu) * std::sin(theta), std::cosh(mu) * std::cos(theta));
            poles[static_cast<std::size_t>(k)] = p;
            prod *= -p;
        }
        gain = prod.real();
        if (n % 2 == 0) gain /= std::sqrt(1.0 + eps * eps);
    }

    // Pre-warp so the digital response hits the analog cutoff exactly, then
    // bilinear-transform each pole; every analog pole contributes a zero at
    // z = -1.
    const double warped = 2.0 * std::tan(kPi * spec.cutoff);
    std::vector<cd> zpoles(static_cast<std::size_t>(n));
    cd denom_prod = 1.0;
    for (int k = 0; k < n; ++k) {
        const cd p = poles[static_cast<std::size_t>(k)] * warped;
        zpoles[static_cast<std::size_t>(k)] = (2.0 + p) / (2.0 - p);
        denom_prod *= (2.0 - p);
    }
    const double total_gain = gain * std::pow(warped, n) / denom_prod.real();

    // Pair conjugate poles into second-order sections; an odd order leaves
    // one real pole as a degenerate section. Gain is spread evenly so no
    // section saturates.
    const int nsec = (n + 1) / 2;
    const double section_gain = std::pow(total_gain, 1.0 / nsec);
    std::vector<Biquad> biquads;
    biquads.reserve(static_cast<std::size_t>(nsec));

    // Conjugate pairs are (k, n-1-k) under both pole layouts above.
    for (int k = 0; k < n / 2; ++k) {
        const cd z = zpoles[static_cast<std::size_t>(k)];
        Biquad s{};
        s.b0 = section_gain;
        s.b1 = 2.0 * section_gain;
        s.b2 = section_gain;
        s.a1 = -2.0 * z.real();
        s.a2 = std::norm(z);
        biquads.push_back(s);
    }
    if (n % 2 == 1) {
        const cd z = zpoles[static_cast<std::size_t>(n / 2)];
        Biquad s{};
        s.b0 = section_gain;
        s.b1 = section_gain;
        s.b2 = 0.0;
        s.a1 = -z.real();
        s.a2 = 0.0;
        biquads.push_back(s);
    }

    DesignedFilter out;
    out.spec = spec;
    out.biquads = std::move(biquads);
    return out;
}

Eigen::VectorXd apply_filter(const Eigen::Ref<const Eigen::VectorXd>& x, const DesignedFilter& f) {
    const Eigen::Index n = x.size();

    if (f.spec.kind == FilterKind::Fir) {
        const Eigen::VectorXd& h = f.fir_coeffs;
        const Eigen::Index taps = h.size();
        const Eigen::Index m = (taps - 1) / 2;
        Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
        // y[i] = full_convolution[i + m]: group-delay-compensated alignment.
        for (Eigen::Index i = 0; i < n; ++i) {
            double acc = 0.0;
            const Eigen::Index c = i + m;
            const Eigen::Index k_lo = std::max<Eigen::Index>(0, c - n + 1);
            const Eigen::Index k_hi = std::min<Eigen::Index>(taps - 1, c);
            for (Eigen::Index k = k_lo; k <= k_hi; ++k) {
                acc += h[k] * x[c - k];
            }
            y[i] = acc;
        }
        return y;
    }

    if (f.spec.kind == FilterKind::Iir) {
        Eigen::VectorXd y = x;
        // Direct form II transposed per section, state local to this call.
        for (const Biquad& s : f.biquads) {
            double z1 = 0.0, z2 = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                const double in = y[i];
                const double out = s.b0 * in + z1;
                z1 = s.b1 * in - s.a1 * out + z2;
                z2 = s.b2 * in - s.a2 * out;
                y[i] = out;
            }
        }
        return y;
    }

    return fft_lowpass(x, f.spec.cutoff);
}

std::complex<double> response(const DesignedFilter& f, double freq) {
    using cd = std::complex<double>;
    const cd z_inv = std::polar(1.0, -2.0 * kPi * freq);

    if (f.spec.kind == FilterKind::Fir) {
        cd acc = 0.0;
        cd zk = 1.0;
        for (Eigen::Index k = 0; k < f.fir_coeffs.size(); ++k) {
            acc += f.fir_coeffs[k] * zk;
            zk *= z_inv;
        }
        return acc;
    }

    if (f.spec.kind == FilterKind::Iir) {
        cd acc = 1.0;
        for (const Biquad& s : f.biquads) {
            const cd num = s.b0 + s.b1 * z_inv + s.b2 * z_inv * z_inv;
            const cd den = 1.0 + s.a1 * z_inv + s.a2 * z_inv * z_inv;
            acc *= num / den;
        }
        return acc;
    }

    return (freq <= f.spec.cutoff) ? cd(1.0, 0.0) : cd(0.0, 0.0);
}

}  // namespace resample::filters
