#pragma once

#include <stdexcept>
#include <string>

namespace resample {

// Typed failures thrown across the library. Each carries a readable message;
// the type itself is the contract tests and callers key on.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define RESAMPLE_DEFINE_ERROR(Name)                                  \
    struct Name : Error {                                            \
        explicit Name(const std::string& msg) : Error(msg) {}        \
    }

// wav_io
RESAMPLE_DEFINE_ERROR(MalformedRiff);
RESAMPLE_DEFINE_ERROR(UnsupportedCodec);
RESAMPLE_DEFINE_ERROR(UnsupportedDepth);
RESAMPLE_DEFINE_ERROR(NonFiniteSample);

// framing
RESAMPLE_DEFINE_ERROR(EmptySignal);
RESAMPLE_DEFINE_ERROR(LengthMismatch);

// filters / transforms
RESAMPLE_DEFINE_ERROR(NonPowerOfTwoLength);
RESAMPLE_DEFINE_ERROR(InvalidSpec);

// sampling
RESAMPLE_DEFINE_ERROR(InvalidRate);
RESAMPLE_DEFINE_ERROR(TooFewSamples);

// spline / reconstruction
RESAMPLE_DEFINE_ERROR(TooFewPoints);
RESAMPLE_DEFINE_ERROR(UnsortedPositions);
RESAMPLE_DEFINE_ERROR(InvalidSparsity);

// metrics
RESAMPLE_DEFINE_ERROR(ZeroReference);

// bench / config
RESAMPLE_DEFINE_ERROR(EmptyDataset);
RESAMPLE_DEFINE_ERROR(ConfigError);

#undef RESAMPLE_DEFINE_ERROR

}  // namespace resample
