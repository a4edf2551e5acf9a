#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "resample/filters.hpp"
#include "resample/reconstruct.hpp"

namespace resample::config {

// Sampling/recovery schemes. U-* pipelines anti-alias then sample uniformly;
// R-* pipelines sample randomly with no anti-aliasing. The trailing token
// names the recovery: Sp = cubic spline, otherwise low-pass / IMAT / IMATI.
enum class Method {
    UAfFftSp,   // "U-AF-FFT-Sp"
    UAfFft,     // "U-AF-FFT"
    UAfFirSp,   // "U-AF-FIR-Sp"
    UAfFir,     // "U-AF-FIR"
    UAfIirSp,   // "U-AF-IIR-Sp"
    RImati,     // "R-IMATI"
    RSp,        // "R-Sp"
    RImat,      // "R-IMAT"
};

std::string method_name(Method m);
Method method_from_name(const std::string& name);  // throws ConfigError

// The six standard schemes; U-AF-IIR-Sp and R-IMAT are opt-in extensions.
std::vector<Method> default_methods();

struct BenchConfig {
    std::string dataset_dir;
    std::string output_dir = "bench_out";
    std::vector<double> rates = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::vector<Method> methods = default_methods();
    int frame_len = 1024;
    std::uint64_t seed = 0;
    int threads = 1;
    bool no_timing = false;
    int timing_repeats = 1;

    // Anti-aliasing filter realization; cutoff is set per rate by the bench.
    filters::FirWindow fir_window = filters::FirWindow::Hamming;
    int fir_taps = 63;
    double kaiser_beta = 8.6;
    filters::IirDesign iir_design = filters::IirDesign::Butterworth;
    int iir_order = 6;
    double iir_ripple_db = 1.0;

    reconstruct::ImatParams imat;
    spline::Boundary spline_boundary = spline::Boundary::NotAKnot;

    std::string pesq_command;  // template with {ref}/{deg}; empty = disabled
};

// Flat key=value lines; '#' starts a comment; blank lines ignored.
// Throws ConfigError on malformed lines.
std::map<std::string, std::string> parse_key_values(const std::string& text);
std::map<std::string, std::string> parse_config_file(const std::string& path);

// Applies dotted keys (dataset, out, rates, methods, frame_len, seed,
// threads, timing.repeats, filter.*, imat.*, spline.boundary, pesq.command)
// onto a config. Unknown keys throw ConfigError.
void apply_key_values(BenchConfig& config, const std::map<std::string, std::string>& kv);

// Comma-separated parsing used by both config files and CLI flags.
std::vector<double> parse_rates(const std::string& csv);
std::vector<Method> parse_methods(const std::string& csv);

}  // namespace resample::config
