#include "resample/fft.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "resample/errors.hpp"

namespace resample::fft {
namespace {

// In-place Cooley-Tukey with bit-reversal permutation. Twiddles come from
// std::polar per stage so accuracy does not depend on repeated multiplication.
void transform(Eigen::VectorXcd& a, bool invert) {
    const Eigen::Index n = a.size();

    for (Eigen::Index i = 1, j = 0; i < n; ++i) {
        Eigen::Index bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (Eigen::Index len = 2; len <= n; len <<= 1) {
        const double ang = (invert ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const Eigen::Index half = len >> 1;
        std::vector<std::complex<double>> w(static_cast<std::size_t>(half));
        for (Eigen::Index k = 0; k < half; ++k) {
            w[static_cast<std::size_t>(k)] = std::polar(1.0, ang * static_cast<double>(k));
        }
        for (Eigen::Index i = 0; i < n; i += len) {
            for (Eigen::Index k = 0; k < half; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + half] * w[static_cast<std::size_t>(k)];
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }

    if (invert) a /= static_cast<double>(n);
}

void require_pow2(Eigen::Index n) {
    if (!is_power_of_two(n)) {
        throw NonPowerOfTwoLength("length " + std::to_string(n) + " is not a power of two");
    }
}

}  // namespace

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

Eigen::VectorXcd forward(const Eigen::Ref<const Eigen::VectorXcd>& x) {
    require_pow2(x.size());
    Eigen::VectorXcd a = x;
    transform(a, false);
    return a;
}

Eigen::VectorXcd inverse(const Eigen::Ref<const Eigen::VectorXcd>& x) {
    require_pow2(x.size());
    Eigen::VectorXcd a = x;
    transform(a, true);
    return a;
}

Eigen::VectorXcd forward_real(const Eigen::Ref<const Eigen::VectorXd>& x) {
    return forward(x.cast<std::complex<double>>());
}

Eigen::VectorXd dct2(const Eigen::Ref<const Eigen::VectorXd>& x) {
    const Eigen::Index n = x.size();
    require_pow2(n);

    // Even extension [x, reverse(x)] turns the DCT-II into the real part of a
    // phase-rotated length-2n DFT.
    Eigen::VectorXcd ext(2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        ext[i] = x[i];
        ext[2 * n - 1 - i] = x[i];
    }
    Eigen::VectorXcd spec = forward(ext);

    Eigen::VectorXd out(n);
    const double base = -std::numbers::pi / (2.0 * static_cast<double>(n));
    for (Eigen::Index k = 0; k < n; ++k) {
        const std::complex<double> rot = std::polar(1.0, base * static_cast<double>(k));
        const double ck = (rot * spec[k]).real() * 0.5;
        const double alpha = (k == 0) ? std::sqrt(1.0 / static_cast<double>(n))
                                      : std::sqrt(2.0 / static_cast<double>(n));
        out[k] = alpha * ck;
    }
    return out;
}

Eigen::VectorXd idct2(const Eigen::Ref<const Eigen::VectorXd>& c) {
    const Eigen::Index n = c.size();
    require_pow2(n);

    // Rebuild the conjugate-symmetric length-2n spectrum of the even
    // extension, then take the first half of its inverse DFT.
    Eigen::VectorXcd spec(2 * n);
    const double base = std::numbers::pi / (2.0 * static_cast<double>(n));
    for (Eigen::Index k = 0; k < n; ++k) {
        const double alpha = (k == 0) ? std::sqrt(1.0 / static_cast<double>(n))
                                      : std::sqrt(2.0 / static_cast<double>(n));
        const double ck = 2.0 * c[k] / alpha;
        spec[k] = std::polar(1.0, base * static_cast<double>(k)) * ck;
    }
    spec[n] = 0.0;
    for (Eigen::Index k = 1; k < n; ++k) {
        spec[2 * n - k] = std::conj(spec[k]);
    }

    const Eigen::VectorXcd ext = inverse(spec);
    return ext.head(n).real();
}

}  // namespace resample::fft
