#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "resample/config.hpp"
#include "resample/framing.hpp"
#include "resample/metrics.hpp"

namespace resample::bench {

// One (file, method, rate) result row.
struct BenchRecord {
    std::string file;
    config::Method method;
    double rate = 0.0;
    double snr_db = 0.0;
    double elapsed_seconds = 0.0;
    std::uint64_t seed = 0;
};

// Executes one scheme on one frame. U-* methods anti-alias (cutoff =
// rate * 0.5, skipped at rate 1.0 where the cutoff reaches Nyquist and the
// filter is the identity), sample uniformly, then recover; R-* methods
// sample randomly (per-frame seed) and recover with spline/imat/imati.
// SNR is computed against the ORIGINAL unfiltered frame over valid_len;
// elapsed covers the pipeline, not the metric.
std::pair<framing::Frame, metrics::EvalResult> run_pipeline(const framing::Frame& frame,
                                                            config::Method method, double rate,
                                                            std::uint64_t seed,
                                                            const config::BenchConfig& config);

// Full matrix over every WAV in config.dataset_dir: per file x method x
// rate, frames are processed independently (per-frame seed = seed ^ frame
// index), merged, and scored as a whole signal. Writes results.csv,
// plots/<method>.dat, recovered WAVs, and summary.txt under
// config.output_dir. Records are sorted by (file, method name, rate) so
// output is schedule-independent; with threads=1 and no_timing the whole
// output is byte-deterministic. Throws EmptyDataset when no file can be
// processed.
std::vector<BenchRecord> run_bench(const config::BenchConfig& config);

// Whole-signal recovery with one (method, rate): split into frames, run the
// pipeline per frame (seed = config.seed ^ frame index), merge. Returns the
// recovered signal and the summed pipeline time.
std::pair<Eigen::VectorXd, double> recover_signal(
    const Eigen::Ref<const Eigen::VectorXd>& samples, config::Method method, double rate,
    const config::BenchConfig& config);

// Serialization helpers shared by the CLI and tests.
std::string format_rate(double rate);                       // shortest round-trip form
std::string results_csv(const std::vector<BenchRecord>& records);

}  // namespace resample::bench
