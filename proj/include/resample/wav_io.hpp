#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace resample::wav {

// Mono normalized signal decoded from (or destined for) a PCM WAV file.
struct AudioSignal {
    Eigen::VectorXd samples;        // nominal range [-1, 1]
    int sample_rate_hz = 44100;
    int source_bit_depth = 16;      // 16 or 24
    int source_channels = 1;
};

// Decodes a RIFF/WAVE byte stream: PCM only (format tag 1), 16- or 24-bit,
// any channel count (downmixed to mono by per-frame arithmetic mean).
// 16-bit samples map via s/32768, 24-bit via s/8388608. Unknown chunks are
// skipped. Throws MalformedRiff / UnsupportedCodec / UnsupportedDepth.
AudioSignal read_wav(const std::vector<std::uint8_t>& bytes);

// Encodes a canonical 44-byte-header mono 16-bit PCM stream. Amplitudes are
// clamped to [-1, 1] and quantized by round(s * 32768) clamped to the int16
// range, the inverse of the s/32768 decode rule, so quantized signals
// round-trip bit-exactly. Throws NonFiniteSample.
std::vector<std::uint8_t> write_wav(const AudioSignal& signal);

AudioSignal read_wav_file(const std::string& path);
void write_wav_file(const AudioSignal& signal, const std::string& path);

}  // namespace resample::wav
