#include "resample/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

#include "resample/errors.hpp"
#include "resample/filters.hpp"
#include "resample/reconstruct.hpp"
#include "resample/sampling.hpp"
#include "resample/spline.hpp"
#include "resample/wav_io.hpp"

namespace resample::bench {
namespace {

namespace fs = std::filesystem;
using config::BenchConfig;
using config::Method;

bool is_uniform_method(Method m) {
    switch (m) {
        case Method::UAfFftSp:
        case Method::UAfFft:
        case Method::UAfFirSp:
        case Method::UAfFir:
        case Method::UAfIirSp:
            return true;
        default:
            return false;
    }
}

enum class Recovery { Spline, Lowpass, Imat, Imati };

Recovery recovery_of(Method m) {
    switch (m) {
        case Method::UAfFftSp:
        case Method::UAfFirSp:
        case Method::UAfIirSp:
        case Method::RSp:
            return Recovery::Spline;
        case Method::UAfFft:
        case Method::UAfFir:
            return Recovery::Lowpass;
        case Method::RImat:
            return Recovery::Imat;
        case Method::RImati:
            return Recovery::Imati;
    }
    return Recovery::Lowpass;
}

// Anti-aliasing realization for a U-* method at a given rate, or nothing
// when the cutoff reaches Nyquist (rate 1.0) and filtering is the identity.
std::optional<filters::DesignedFilter> make_af(Method method, double rate,
                                               const BenchConfig& config) {
    if (!is_uniform_method(method)) return std::nullopt;
    const double cutoff = rate * 0.5;
    if (cutoff >= 0.5) return std::nullopt;

    filters::FilterSpec spec;
    spec.cutoff = cutoff;
    switch (method) {
        case Method::UAfFftSp:
        case Method::UAfFft:
            spec.kind = filters::FilterKind::FftBrickwall;
            return filters::DesignedFilter{spec, {}, {}};
        case Method::UAfFirSp:
        case Method::UAfFir:
            spec.kind = filters::FilterKind::Fir;
            spec.fir_window = config.fir_window;
            spec.fir_taps = config.fir_taps;
            spec.kaiser_beta = config.kaiser_beta;
            return filters::design_fir(spec);
        case Method::UAfIirSp:
            spec.kind = filters::FilterKind::Iir;
            spec.iir_design = config.iir_design;
            spec.iir_order = config.iir_order;
            spec.iir_ripple_db = config.iir_ripple_db;
            return filters::design_iir(spec);
        default:
            return std::nullopt;
    }
}

// The timed portion of one frame's pipeline: anti-alias, sample, recover.
Eigen::VectorXd pipeline_core(const Eigen::Ref<const Eigen::VectorXd>& data, Method method,
                              double rate, std::uint64_t seed,
                              const std::optional<filters::DesignedFilter>& af,
                              const BenchConfig& config) {
    const int n = static_cast<int>(data.size());

    Eigen::VectorXd filtered = af ? filters::apply_filter(data, *af) : Eigen::VectorXd(data);

    const sampling::SampleMask mask = is_uniform_method(method)
                                          ? sampling::uniform_mask(n, rate)
                                          : sampling::random_mask(n, rate, seed);

    switch (recovery_of(method)) {
        case Recovery::Spline: {
            Eigen::VectorXd values(static_cast<Eigen::Index>(mask.kept.size()));
            for (std::size_t j = 0; j < mask.kept.size(); ++j) {
                values[static_cast<Eigen::Index>(j)] = filtered[mask.kept[j]];
            }
            return spline::spline_interpolate(mask.kept, values, n, config.spline_boundary);
        }
        case Recovery::Lowpass:
            return reconstruct::recover_lowpass(sampling::apply_mask(filtered, mask), mask);
        case Recovery::Imat:
            return reconstruct::imat(sampling::apply_mask(filtered, mask), mask, config.imat);
        case Recovery::Imati:
            return reconstruct::imati(sampling::apply_mask(filtered, mask), mask, config.imat);
    }
    return filtered;
}

struct LoadedFile {
    std::string name;   // basename with extension
    std::string stem;   // basename without the final extension
    wav::AudioSignal signal;
};

struct Task {
    std::size_t file_idx;
    Method method;
    double rate;
};

struct TaskOutcome {
    std::optional<BenchRecord> record;
    std::string error;
};

std::string sanitize_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

std::string format_rate(double rate) { return sanitize_number(rate); }

std::pair<framing::Frame, metrics::EvalResult> run_pipeline(const framing::Frame& frame,
                                                            Method method, double rate,
                                                            std::uint64_t seed,
                                                            const BenchConfig& config) {
    const auto af = make_af(method, rate, config);
    auto [recovered, elapsed] = metrics::timed(
        [&] { return pipeline_core(frame.data, method, rate, seed, af, config); });

    framing::Frame out;
    out.data = std::move(recovered);
    out.index = frame.index;
    out.valid_len = frame.valid_len;

    metrics::EvalResult eval;
    eval.snr_db = metrics::snr_db(frame.data.head(frame.valid_len), out.data.head(frame.valid_len));
    eval.elapsed_seconds = elapsed;
    eval.samples_evaluated = frame.valid_len;
    return {std::move(out), eval};
}

std::pair<Eigen::VectorXd, double> recover_signal(
    const Eigen::Ref<const Eigen::VectorXd>& samples, config::Method method, double rate,
    const config::BenchConfig& config) {
    const auto af = make_af(method, rate, config);
    const std::vector<framing::Frame> frames = framing::split_frames(samples, config.frame_len);
    std::vector<framing::Frame> recovered;
    recovered.reserve(frames.size());
    double total_elapsed = 0.0;

    for (const auto& frame : frames) {
        const std::uint64_t frame_seed = config.seed ^ static_cast<std::uint64_t>(frame.index);
        auto [data, elapsed] = metrics::timed([&] {
            return pipeline_core(frame.data, method, rate, frame_seed, af, config);
        });
        framing::Frame out;
        out.data = std::move(data);
        out.index = frame.index;
        out.valid_len = frame.valid_len;
        recovered.push_back(std::move(out));
        total_elapsed += elapsed;
    }

    Eigen::VectorXd merged = framing::merge_frames(recovered, samples.size());
    return {std::move(merged), total_elapsed};
}

namespace {

TaskOutcome run_task(const LoadedFile& file, const Task& task, const BenchConfig& config,
                     const fs::path& recovered_dir) {
    TaskOutcome outcome;
    try {
        auto [merged, elapsed] =
            recover_signal(file.signal.samples, task.method, task.rate, config);
        if (!config.no_timing && config.timing_repeats > 1) {
            std::vector<double> times;
            times.reserve(static_cast<std::size_t>(config.timing_repeats));
            times.push_back(elapsed);
            for (int r = 1; r < config.timing_repeats; ++r) {
                times.push_back(
                    recover_signal(file.signal.samples, task.method, task.rate, config).second);
            }
            elapsed = metrics::median(std::move(times));
        }

        wav::AudioSignal out_signal;
        out_signal.samples = merged;
        out_signal.sample_rate_hz = file.signal.sample_rate_hz;
        const std::string out_name = file.stem + "." + config::method_name(task.method) + "." +
                                     format_rate(task.rate) + ".wav";
        wav::write_wav_file(out_signal, (recovered_dir / out_name).string());

        BenchRecord record;
        record.file = file.name;
        record.method = task.method;
        record.rate = task.rate;
        record.snr_db = metrics::snr_db(file.signal.samples, merged);
        record.elapsed_seconds = config.no_timing ? 0.0 : elapsed;
        record.seed = config.seed;
        outcome.record = std::move(record);
    } catch (const std::exception& e) {
        outcome.error = file.name + " / " + config::method_name(task.method) + " / rate " +
                        format_rate(task.rate) + ": " + e.what();
    }
    return outcome;
}

void write_plot_data(const std::vector<BenchRecord>& records, const BenchConfig& config,
                     const fs::path& plots_dir) {
    for (Method method : config.methods) {
        std::map<double, std::pair<double, int>> by_rate;  // rate -> (snr sum, count)
        for (const auto& r : records) {
            if (r.method != method) continue;
            auto& acc = by_rate[r.rate];
            acc.first += r.snr_db;
            acc.second += 1;
        }
        std::ofstream out(plots_dir / (config::method_name(method) + ".dat"),
                          std::ios::trunc | std::ios::binary);
        out << "# rate snr_db\n";
        for (const auto& [rate, acc] : by_rate) {
            out << format_rate(rate) << " " << metrics::format_metric(acc.first / acc.second)
                << "\n";
        }
    }
}

void write_summary(const std::vector<BenchRecord>& records, const BenchConfig& config,
                   const std::vector<std::pair<std::string, double>>& pesq_rows,
                   std::size_t file_count, const fs::path& path) {
    std::ofstream out(path, std::ios::trunc | std::ios::binary);

    std::vector<double> rates = config.rates;
    std::sort(rates.begin(), rates.end());

    out << "Benchmark summary\n";
    out << "files=" << file_count << " methods=" << config.methods.size()
        << " rates=" << rates.size() << " frame_len=" << config.frame_len
        << " seed=" << config.seed << "\n\n";

    const auto mean_snr = [&records](Method m, double rate) -> std::optional<double> {
        double sum = 0.0;
        int count = 0;
        for (const auto& r : records) {
            if (r.method == m && r.rate == rate) {
                sum += r.snr_db;
                ++count;
            }
        }
        if (count == 0) return std::nullopt;
        return sum / count;
    };
    const auto mean_elapsed = [&records](Method m, std::optional<double> rate) {
        double sum = 0.0;
        int count = 0;
        for (const auto& r : records) {
            if (r.method == m && (!rate || r.rate == *rate)) {
                sum += r.elapsed_seconds;
                ++count;
            }
        }
        return count == 0 ? 0.0 : sum / count;
    };

    out << "Mean SNR (dB) over files\n";
    out << "method";
    for (double rate : rates) out << "\t" << format_rate(rate);
    out << "\n";
    for (Method m : config.methods) {
        out << config::method_name(m);
        for (double rate : rates) {
            const auto v = mean_snr(m, rate);
            out << "\t" << (v ? metrics::format_metric(*v) : std::string("-"));
        }
        out << "\n";
    }
    out << "\n";

    out << "Mean elapsed seconds by method (normalized by the slowest)\n";
    double max_mean = 0.0;
    for (Method m : config.methods) max_mean = std::max(max_mean, mean_elapsed(m, {}));
    for (Method m : config.methods) {
        const double mean = mean_elapsed(m, {});
        out << config::method_name(m) << "\t" << metrics::format_metric(mean) << "\t";
        if (max_mean > 0.0) {
            out << metrics::format_metric(mean / max_mean);
        } else {
            out << "n/a";
        }
        out << "\n";
    }
    out << "\n";

    // Observational check: per method, the spread of mean elapsed time
    // across rates. Informational only; never fails the run.
    out << "Timing flatness across rates (max/min of mean elapsed; observational, target <= 3x)\n";
    for (Method m : config.methods) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (double rate : rates) {
            const double mean = mean_elapsed(m, rate);
            lo = std::min(lo, mean);
            hi = std::max(hi, mean);
        }
        out << config::method_name(m) << "\t";
        if (config.no_timing || lo <= 0.0 || !std::isfinite(lo)) {
            out << "n/a (timing disabled or no data)";
        } else {
            const double ratio = hi / lo;
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.2fx", ratio);
            out << buf << "\t" << (ratio <= 3.0 ? "OK" : "EXCEEDS 3x (informational)");
        }
        out << "\n";
    }

    if (!pesq_rows.empty()) {
        out << "\nPESQ by method (mean over files and rates; detail in pesq.csv)\n";
        std::map<std::string, std::pair<double, int>> by_method;
        for (const auto& [method, score] : pesq_rows) {
            auto& acc = by_method[method];
            acc.first += score;
            acc.second += 1;
        }
        for (Method m : config.methods) {
            const auto it = by_method.find(config::method_name(m));
            if (it == by_method.end()) continue;
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.3f", it->second.first / it->second.second);
            out << config::method_name(m) << "\t" << buf << "\n";
        }
    }
}

}  // namespace

std::string results_csv(const std::vector<BenchRecord>& records) {
    std::string out = "file,method,rate,snr_db,elapsed_seconds,seed\n";
    for (const auto& r : records) {
        out += r.file;
        out += ',';
        out += config::method_name(r.method);
        out += ',';
        out += metrics::format_metric(r.rate);
        out += ',';
        out += metrics::format_metric(r.snr_db);
        out += ',';
        out += metrics::format_metric(r.elapsed_seconds);
        out += ',';
        out += std::to_string(r.seed);
        out += '\n';
    }
    return out;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
    if (config.methods.empty()) {
        throw ConfigError("no methods selected");
    }
    if (config.rates.empty()) {
        throw ConfigError("no rates selected");
    }

    // Dataset enumeration is sorted by name so task order (and therefore
    // single-threaded output) is independent of directory iteration order.
    std::vector<fs::path> wav_paths;
    if (!fs::is_directory(config.dataset_dir)) {
        throw EmptyDataset("dataset directory " + config.dataset_dir + " does not exist");
    }
    for (const auto& entry : fs::directory_iterator(config.dataset_dir)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        std::transform(ext.begin(), ext.end(), ext.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (ext == ".wav") wav_paths.push_back(entry.path());
    }
    std::sort(wav_paths.begin(), wav_paths.end());
    if (wav_paths.empty()) {
        throw EmptyDataset("no .wav files in " + config.dataset_dir);
    }

    std::vector<LoadedFile> files;
    for (const auto& path : wav_paths) {
        try {
            LoadedFile f;
            f.name = path.filename().string();
            f.stem = path.stem().string();
            f.signal = wav::read_wav_file(path.string());
            files.push_back(std::move(f));
        } catch (const std::exception& e) {
            std::cerr << "skip " << path.filename().string() << ": " << e.what() << "\n";
        }
    }
    if (files.empty()) {
        throw EmptyDataset("all files in " + config.dataset_dir + " failed to load");
    }

    const fs::path out_dir(config.output_dir);
    const fs::path recovered_dir = out_dir / "recovered";
    const fs::path plots_dir = out_dir / "plots";
    fs::create_directories(recovered_dir);
    fs::create_directories(plots_dir);

    std::vector<Task> tasks;
    for (std::size_t fi = 0; fi < files.size(); ++fi) {
        for (Method m : config.methods) {
            for (double rate : config.rates) {
                tasks.push_back(Task{fi, m, rate});
            }
        }
    }

    std::vector<TaskOutcome> outcomes(tasks.size());
    const int n_threads = std::max(1, config.threads);
    if (n_threads == 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            outcomes[t] = run_task(files[tasks[t].file_idx], tasks[t], config, recovered_dir);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(n_threads));
        for (int w = 0; w < n_threads; ++w) {
            workers.emplace_back([&] {
                for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) {
                    outcomes[t] =
                        run_task(files[tasks[t].file_idx], tasks[t], config, recovered_dir);
                }
            });
        }
        for (auto& w : workers) w.join();
    }

    std::vector<BenchRecord> records;
    records.reserve(tasks.size());
    for (const auto& outcome : outcomes) {
        if (outcome.record) {
            records.push_back(*outcome.record);
        } else {
            std::cerr << "skip " << outcome.error << "\n";
        }
    }
    if (records.empty()) {
        throw EmptyDataset("every (file, method, rate) task failed");
    }

    std::sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
        if (a.file != b.file) return a.file < b.file;
        const std::string ma = config::method_name(a.method);
        const std::string mb = config::method_name(b.method);
        if (ma != mb) return ma < mb;
        return a.rate < b.rate;
    });

    {
        std::ofstream out(out_dir / "results.csv", std::ios::trunc | std::ios::binary);
        out << results_csv(records);
    }
    write_plot_data(records, config, plots_dir);

    // Optional external PESQ pass over the recovered files.
    std::vector<std::pair<std::string, double>> pesq_rows;
    if (!config.pesq_command.empty()) {
        std::ofstream pesq_csv(out_dir / "pesq.csv", std::ios::trunc | std::ios::binary);
        pesq_csv << "file,method,rate,pesq\n";
        for (const auto& file : files) {
            const fs::path ref_path = recovered_dir / (file.stem + ".ref.wav");
            wav::AudioSignal ref;
            ref.samples = file.signal.samples;
            ref.sample_rate_hz = file.signal.sample_rate_hz;
            wav::write_wav_file(ref, ref_path.string());
        }
        for (const auto& r : records) {
            const auto file_it =
                std::find_if(files.begin(), files.end(),
                             [&](const LoadedFile& f) { return f.name == r.file; });
            if (file_it == files.end()) continue;
            const fs::path ref_path = recovered_dir / (file_it->stem + ".ref.wav");
            const fs::path deg_path =
                recovered_dir / (file_it->stem + "." + config::method_name(r.method) + "." +
                                 format_rate(r.rate) + ".wav");
            const auto score =
                metrics::run_pesq(config.pesq_command, ref_path.string(), deg_path.string());
            pesq_csv << r.file << "," << config::method_name(r.method) << ","
                     << metrics::format_metric(r.rate) << ",";
            if (score) {
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.3f", *score);
                pesq_csv << buf;
                pesq_rows.emplace_back(config::method_name(r.method), *score);
            }
            pesq_csv << "\n";
        }
    }

    write_summary(records, config, pesq_rows, files.size(), out_dir / "summary.txt");
    return records;
}

}  // namespace resample::bench
