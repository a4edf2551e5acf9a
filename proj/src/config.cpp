#include "resample/config.hpp"

#include <fstream>
#include <sstream>

#include "resample/errors.hpp"

namespace resample::config {
namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (...) {
        throw ConfigError(key + ": cannot parse '" + value + "' as a number");
    }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (...) {
        throw ConfigError(key + ": cannot parse '" + value + "' as an integer");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (...) {
        throw ConfigError(key + ": cannot parse '" + value + "' as an unsigned integer");
    }
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError(key + ": cannot parse '" + value + "' as a boolean");
}

filters::FirWindow parse_window(const std::string& value) {
    if (value == "rectangular") return filters::FirWindow::Rectangular;
    if (value == "hamming") return filters::FirWindow::Hamming;
    if (value == "blackman") return filters::FirWindow::Blackman;
    if (value == "kaiser") return filters::FirWindow::Kaiser;
    throw ConfigError("filter.fir_window: unknown window '" + value + "'");
}

filters::IirDesign parse_design(const std::string& value) {
    if (value == "butterworth") return filters::IirDesign::Butterworth;
    if (value == "chebyshev1") return filters::IirDesign::Chebyshev1;
    throw ConfigError("filter.iir_design: unknown design '" + value + "'");
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::UAfFftSp: return "U-AF-FFT-Sp";
        case Method::UAfFft: return "U-AF-FFT";
        case Method::UAfFirSp: return "U-AF-FIR-Sp";
        case Method::UAfFir: return "U-AF-FIR";
        case Method::UAfIirSp: return "U-AF-IIR-Sp";
        case Method::RImati: return "R-IMATI";
        case Method::RSp: return "R-Sp";
        case Method::RImat: return "R-IMAT";
    }
    return "?";
}

Method method_from_name(const std::string& name) {
    static const std::map<std::string, Method> table = {
        {"U-AF-FFT-Sp", Method::UAfFftSp}, {"U-AF-FFT", Method::UAfFft},
        {"U-AF-FIR-Sp", Method::UAfFirSp}, {"U-AF-FIR", Method::UAfFir},
        {"U-AF-IIR-Sp", Method::UAfIirSp}, {"R-IMATI", Method::RImati},
        {"R-Sp", Method::RSp},             {"R-IMAT", Method::RImat},
    };
    const auto it = table.find(name);
    if (it == table.end()) {
        throw ConfigError("unknown method '" + name + "'");
    }
    return it->second;
}

std::vector<Method> default_methods() {
    return {Method::UAfFftSp, Method::UAfFft,  Method::UAfFirSp,
            Method::UAfFir,   Method::RImati, Method::RSp};
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key=value, got '" +
                              line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        }
        kv[key] = value;
    }
    return kv;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_key_values(buf.str());
}

std::vector<double> parse_rates(const std::string& csv) {
    std::vector<double> rates;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        const double r = parse_double("rates", item);
        if (!(r > 0.0 && r <= 1.0)) {
            throw ConfigError("rates: " + item + " outside (0, 1]");
        }
        rates.push_back(r);
    }
    if (rates.empty()) {
        throw ConfigError("rates: empty list");
    }
    return rates;
}

std::vector<Method> parse_methods(const std::string& csv) {
    std::vector<Method> methods;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        methods.push_back(method_from_name(item));
    }
    if (methods.empty()) {
        throw ConfigError("methods: empty list");
    }
    return methods;
}

void apply_key_values(BenchConfig& config, const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
        if (key == "dataset") {
            config.dataset_dir = value;
        } else if (key == "out") {
            config.output_dir = value;
        } else if (key == "rates") {
            config.rates = parse_rates(value);
        } else if (key == "methods") {
            config.methods = parse_methods(value);
        } else if (key == "frame_len") {
            const auto v = parse_int(key, value);
            if (v < 1 || (v & (v - 1)) != 0) {
                throw ConfigError("frame_len must be a power of two, got " + value);
            }
            config.frame_len = static_cast<int>(v);
        } else if (key == "seed") {
            config.seed = parse_u64(key, value);
        } else if (key == "threads") {
            const auto v = parse_int(key, value);
            if (v < 1) throw ConfigError("threads must be >= 1");
            config.threads = static_cast<int>(v);
        } else if (key == "no_timing") {
            config.no_timing = parse_bool(key, value);
        } else if (key == "timing.repeats") {
            const auto v = parse_int(key, value);
            if (v < 1) throw ConfigError("timing.repeats must be >= 1");
            config.timing_repeats = static_cast<int>(v);
        } else if (key == "filter.fir_window") {
            config.fir_window = parse_window(value);
        } else if (key == "filter.fir_taps") {
            config.fir_taps = static_cast<int>(parse_int(key, value));
        } else if (key == "filter.kaiser_beta") {
            config.kaiser_beta = parse_double(key, value);
        } else if (key == "filter.iir_design") {
            config.iir_design = parse_design(value);
        } else if (key == "filter.iir_order") {
            config.iir_order = static_cast<int>(parse_int(key, value));
        } else if (key == "filter.iir_ripple_db") {
            config.iir_ripple_db = parse_double(key, value);
        } else if (key == "imat.lambda") {
            config.imat.lambda = parse_double(key, value);
        } else if (key == "imat.beta") {
            config.imat.beta = parse_double(key, value);
        } else if (key == "imat.alpha") {
            config.imat.alpha = parse_double(key, value);
        } else if (key == "imat.iterations") {
            config.imat.iterations = static_cast<int>(parse_int(key, value));
        } else if (key == "imat.transform") {
            if (value == "dft") {
                config.imat.transform = reconstruct::ImatTransform::Dft;
            } else if (value == "dct2") {
                config.imat.transform = reconstruct::ImatTransform::Dct2;
            } else {
                throw ConfigError("imat.transform: expected dft or dct2, got '" + value + "'");
            }
        } else if (key == "spline.boundary") {
            if (value == "not_a_knot") {
                config.spline_boundary = spline::Boundary::NotAKnot;
            } else if (value == "natural") {
                config.spline_boundary = spline::Boundary::Natural;
            } else {
                throw ConfigError("spline.boundary: expected not_a_knot or natural, got '" +
                                  value + "'");
            }
        } else if (key == "pesq.command") {
            config.pesq_command = value;
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    config.imat.spline_boundary = config.spline_boundary;
}

}  // namespace resample::config
