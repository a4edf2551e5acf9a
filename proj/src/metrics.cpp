#include "resample/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "resample/errors.hpp"

namespace resample::metrics {

double snr_db(const Eigen::Ref<const Eigen::VectorXd>& reference,
              const Eigen::Ref<const Eigen::VectorXd>& estimate) {
    if (reference.size() != estimate.size()) {
        throw LengthMismatch("snr_db: reference length " + std::to_string(reference.size()) +
                             " != estimate length " + std::to_string(estimate.size()));
    }
    const double ref_norm = reference.norm();
    if (ref_norm == 0.0) {
        throw ZeroReference("snr_db: reference signal is all zero");
    }
    const double err_norm = (reference - estimate).norm();
    if (err_norm == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 20.0 * std::log10(ref_norm / err_norm);
}

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid),
                     values.end());
    if (values.size() % 2 == 1) {
        return values[mid];
    }
    const double hi = values[mid];
    const double lo = *std::max_element(values.begin(),
                                        values.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lo + hi);
}

std::string format_metric(double value) {
    if (std::isinf(value) && value > 0.0) {
        return "inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::optional<double> run_pesq(const std::string& command_template,
                               const std::string& ref_path, const std::string& deg_path) {
    std::string cmd = command_template;
    const auto replace_all = [&cmd](const std::string& from, const std::string& to) {
        for (std::size_t pos = cmd.find(from); pos != std::string::npos;
             pos = cmd.find(from, pos + to.size())) {
            cmd.replace(pos, from.size(), to);
        }
    };
    replace_all("{ref}", ref_path);
    replace_all("{deg}", deg_path);

    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return std::nullopt;
    }
    std::string output;
    char buf[256];
    while (std::fgets(buf, sizeof(buf), pipe) != nullptr) {
        output += buf;
    }
    const int status = ::pclose(pipe);
    if (status != 0) {
        return std::nullopt;
    }

    // First parseable float anywhere on stdout.
    std::istringstream in(output);
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            const double value = std::stod(token, &used);
            if (used == token.size()) {
                return value;
            }
        } catch (...) {
        }
    }
    return std::nullopt;
}

}  // namespace resample::metrics
