#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <string>

namespace test_helpers {

// Cosine landing exactly on DFT bin `bin` of an n-point frame, so spectral
// assertions see no leakage.
inline Eigen::VectorXd bin_tone(int n, int bin, double amplitude = 1.0, double phase = 0.0) {
    Eigen::VectorXd x(n);
    const double w = 2.0 * std::numbers::pi * bin / n;
    for (int i = 0; i < n; ++i) {
        x[i] = amplitude * std::cos(w * i + phase);
    }
    return x;
}

// O(n^2) reference DFT used as the oracle for the fast transform.
inline Eigen::VectorXcd naive_dft(const Eigen::VectorXd& x) {
    const int n = static_cast<int>(x.size());
    Eigen::VectorXcd out(n);
    for (int k = 0; k < n; ++k) {
        std::complex<double> acc = 0.0;
        for (int t = 0; t < n; ++t) {
            acc += x[t] * std::polar(1.0, -2.0 * std::numbers::pi * k * t / n);
        }
        out[k] = acc;
    }
    return out;
}

// Unique scratch directory per test run, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag = "resample_test") {
        const auto base = std::filesystem::temp_directory_path();
        for (int attempt = 0; attempt < 1000; ++attempt) {
            auto candidate = base / (tag + "." + std::to_string(std::rand()) + "." +
                                     std::to_string(attempt));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
        path_ = base / tag;
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

}  // namespace test_helpers
