#include "resample/sampling.hpp"

#include <cmath>
#include <string>

#include "resample/errors.hpp"
#include "resample/rng.hpp"

namespace resample::sampling {
namespace {

void check_rate(double rate) {
    if (!(rate > 0.0 && rate <= 1.0)) {
        throw InvalidRate("rate must be in (0, 1], got " + std::to_string(rate));
    }
}

void check_len(int frame_len) {
    if (frame_len <= 0) {
        throw InvalidSpec("frame_len must be positive, got " + std::to_string(frame_len));
    }
}

}  // namespace

SampleMask uniform_mask(int frame_len, double rate) {
    check_len(frame_len);
    check_rate(rate);
    SampleMask mask;
    mask.frame_len = frame_len;
    mask.rate = rate;
    for (int i = 0; i < frame_len; ++i) {
        if (std::floor((i + 1) * rate) > std::floor(i * rate)) {
            mask.kept.push_back(i);
        }
    }
    return mask;
}

SampleMask random_mask(int frame_len, double rate, std::uint64_t seed) {
    check_len(frame_len);
    check_rate(rate);
    const int count = static_cast<int>(std::llround(rate * frame_len));
    if (count < 2) {
        throw TooFewSamples("rate " + std::to_string(rate) + " on length " +
                            std::to_string(frame_len) + " keeps fewer than 2 samples");
    }
    SampleMask mask;
    mask.frame_len = frame_len;
    mask.rate = rate;
    mask.kept = rng::sample_without_replacement(frame_len, count, seed);
    return mask;
}

Eigen::VectorXd apply_mask(const Eigen::Ref<const Eigen::VectorXd>& frame,
                           const SampleMask& mask) {
    if (frame.size() != mask.frame_len) {
        throw LengthMismatch("frame length " + std::to_string(frame.size()) +
                             " != mask frame_len " + std::to_string(mask.frame_len));
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(frame.size());
    for (int i : mask.kept) {
        out[i] = frame[i];
    }
    return out;
}

}  // namespace resample::sampling
