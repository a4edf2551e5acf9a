#include "resample/wav_io.hpp"

#include <cmath>
#include <cstring>
#include <fstream>

#include "resample/errors.hpp"

namespace resample::wav {
namespace {

std::uint32_t read_u32(const std::vector<std::uint8_t>& b, std::size_t pos) {
    return static_cast<std::uint32_t>(b[pos]) | (static_cast<std::uint32_t>(b[pos + 1]) << 8) |
           (static_cast<std::uint32_t>(b[pos + 2]) << 16) |
           (static_cast<std::uint32_t>(b[pos + 3]) << 24);
}

std::uint16_t read_u16(const std::vector<std::uint8_t>& b, std::size_t pos) {
    return static_cast<std::uint16_t>(static_cast<std::uint16_t>(b[pos]) |
                                      (static_cast<std::uint16_t>(b[pos + 1]) << 8));
}

void append_u32(std::vector<std::uint8_t>& b, std::uint32_t v) {
    b.push_back(static_cast<std::uint8_t>(v & 0xFF));
    b.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
    b.push_back(static_cast<std::uint8_t>((v >> 16) & 0xFF));
    b.push_back(static_cast<std::uint8_t>((v >> 24) & 0xFF));
}

void append_u16(std::vector<std::uint8_t>& b, std::uint16_t v) {
    b.push_back(static_cast<std::uint8_t>(v & 0xFF));
    b.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
}

bool tag_is(const std::vector<std::uint8_t>& b, std::size_t pos, const char* tag) {
    return std::memcmp(b.data() + pos, tag, 4) == 0;
}

}  // namespace

AudioSignal read_wav(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 12 || !tag_is(bytes, 0, "RIFF") || !tag_is(bytes, 8, "WAVE")) {
        throw MalformedRiff("not a RIFF/WAVE stream");
    }

    bool have_fmt = false;
    std::uint16_t format_tag = 0;
    std::uint16_t channels = 0;
    std::uint32_t sample_rate = 0;
    std::uint16_t bits_per_sample = 0;

    std::size_t data_pos = 0;
    std::uint32_t data_size = 0;
    bool have_data = false;

    // Chunk walk: "fmt " and "data" are required, anything else is skipped.
    std::size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const std::uint32_t chunk_size = read_u32(bytes, pos + 4);
        const std::size_t body = pos + 8;
        if (tag_is(bytes, pos, "fmt ")) {
            if (chunk_size < 16 || body + 16 > bytes.size()) {
                throw MalformedRiff("fmt chunk truncated");
            }
            format_tag = read_u16(bytes, body);
            channels = read_u16(bytes, body + 2);
            sample_rate = read_u32(bytes, body + 4);
            bits_per_sample = read_u16(bytes, body + 14);
            have_fmt = true;
        } else if (tag_is(bytes, pos, "data")) {
            data_pos = body;
            data_size = chunk_size;
            have_data = true;
        }
        // Chunks are word-aligned; odd sizes carry a pad byte.
        pos = body + chunk_size + (chunk_size & 1);
    }

    if (!have_fmt || !have_data) {
        throw MalformedRiff("missing fmt or data chunk");
    }
    if (format_tag != 1) {
        throw UnsupportedCodec("format tag " + std::to_string(format_tag) + " (PCM=1 required)");
    }
    if (bits_per_sample != 16 && bits_per_sample != 24) {
        throw UnsupportedDepth(std::to_string(bits_per_sample) + " bits per sample");
    }
    if (channels == 0) {
        throw MalformedRiff("zero channels");
    }
    if (sample_rate == 0) {
        throw MalformedRiff("zero sample rate");
    }
    if (data_pos + data_size > bytes.size()) {
        throw MalformedRiff("data chunk declares more bytes than present");
    }

    const int bytes_per_sample = bits_per_sample / 8;
    const std::size_t block = static_cast<std::size_t>(bytes_per_sample) * channels;
    const std::size_t n_frames = data_size / block;
    if (n_frames == 0) {
        throw MalformedRiff("empty data chunk");
    }

    AudioSignal out;
    out.sample_rate_hz = static_cast<int>(sample_rate);
    out.source_bit_depth = bits_per_sample;
    out.source_channels = channels;
    out.samples.resize(static_cast<Eigen::Index>(n_frames));

    const double scale = (bits_per_sample == 16) ? 1.0 / 32768.0 : 1.0 / 8388608.0;
    for (std::size_t f = 0; f < n_frames; ++f) {
        double acc = 0.0;
        for (std::uint16_t c = 0; c < channels; ++c) {
            const std::size_t p = data_pos + f * block + static_cast<std::size_t>(c) * bytes_per_sample;
            std::int32_t v;
            if (bits_per_sample == 16) {
                v = static_cast<std::int16_t>(read_u16(bytes, p));
            } else {
                v = static_cast<std::int32_t>(bytes[p]) | (static_cast<std::int32_t>(bytes[p + 1]) << 8) |
                    (static_cast<std::int32_t>(bytes[p + 2]) << 16);
                if (v & 0x800000) v -= 0x1000000;  // sign-extend 24 bits
            }
            acc += static_cast<double>(v) * scale;
        }
        out.samples[static_cast<Eigen::Index>(f)] = acc / channels;
    }
    return out;
}

std::vector<std::uint8_t> write_wav(const AudioSignal& signal) {
    const Eigen::Index n = signal.samples.size();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!std::isfinite(signal.samples[i])) {
            throw NonFiniteSample("sample " + std::to_string(i) + " is not finite");
        }
    }

    const std::uint32_t data_size = static_cast<std::uint32_t>(n) * 2;
    std::vector<std::uint8_t> out;
    out.reserve(44 + data_size);

    out.insert(out.end(), {'R', 'I', 'F', 'F'});
    append_u32(out, 36 + data_size);
    out.insert(out.end(), {'W', 'A', 'V', 'E'});

    out.insert(out.end(), {'f', 'm', 't', ' '});
    append_u32(out, 16);
    append_u16(out, 1);  // PCM
    append_u16(out, 1);  // mono
    append_u32(out, static_cast<std::uint32_t>(signal.sample_rate_hz));
    append_u32(out, static_cast<std::uint32_t>(signal.sample_rate_hz) * 2);  // byte rate
    append_u16(out, 2);   // block align
    append_u16(out, 16);  // bits per sample

    out.insert(out.end(), {'d', 'a', 't', 'a'});
    append_u32(out, data_size);

    for (Eigen::Index i = 0; i < n; ++i) {
        double s = signal.samples[i];
        s = std::min(1.0, std::max(-1.0, s));
        // Inverse of the s/32768 decode rule, saturating at int16 max.
        long q = std::lround(s * 32768.0);
        q = std::min(32767L, std::max(-32768L, q));
        append_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
    }
    return out;
}

AudioSignal read_wav_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MalformedRiff("cannot open " + path);
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return read_wav(bytes);
}

void write_wav_file(const AudioSignal& signal, const std::string& path) {
    const auto bytes = write_wav(signal);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot open " + path + " for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

}  // namespace resample::wav
