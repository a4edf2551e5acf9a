#pragma once

#include <Eigen/Dense>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace resample::metrics {

struct EvalResult {
    double snr_db = 0.0;               // +infinity when the error is zero
    double elapsed_seconds = 0.0;
    std::int64_t samples_evaluated = 0;
};

// 20*log10(|x| / |x - xhat|); returns +infinity when the estimate is exact.
// Throws LengthMismatch, ZeroReference.
double snr_db(const Eigen::Ref<const Eigen::VectorXd>& reference,
              const Eigen::Ref<const Eigen::VectorXd>& estimate);

// Runs the action under a monotonic clock; the result is exactly what the
// untimed call would return.
template <typename F>
auto timed(F&& action) -> std::pair<decltype(action()), double> {
    const auto start = std::chrono::steady_clock::now();
    auto value = action();
    const auto stop = std::chrono::steady_clock::now();
    const double elapsed = std::chrono::duration<double>(stop - start).count();
    return {std::move(value), elapsed};
}

double median(std::vector<double> values);

// Serializes for CSV: fixed 6 decimals, "inf" for the +infinity sentinel.
std::string format_metric(double value);

// Runs an external PESQ command built from a template with {ref} and {deg}
// placeholders and parses one float from its stdout. Empty result when the
// command fails or prints no number.
std::optional<double> run_pesq(const std::string& command_template,
                               const std::string& ref_path, const std::string& deg_path);

}  // namespace resample::metrics
