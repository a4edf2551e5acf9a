#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace resample::sampling {

// Retained-index set defining a sampling pattern at a nominal rate.
struct SampleMask {
    int frame_len = 0;
    std::vector<int> kept;   // sorted, duplicate-free, non-empty
    double rate = 1.0;       // nominal fraction in (0, 1]
};

// Keeps index i iff floor((i+1)*rate) > floor(i*rate). For rate = 1/M this
// keeps every M-th sample; for rate > 0.5 it gives the periodic quasi-uniform
// pattern (|kept| = floor(frame_len * rate)). Throws InvalidRate.
SampleMask uniform_mask(int frame_len, double rate);

// Exactly round(rate * frame_len) indices drawn uniformly without
// replacement from a splitmix64 stream; identical (len, rate, seed) give
// identical masks on every platform. Requires round(rate * frame_len) >= 2.
// Throws InvalidRate, TooFewSamples.
SampleMask random_mask(int frame_len, double rate, std::uint64_t seed);

// Original values at kept indices, exact 0.0 elsewhere.
// Throws LengthMismatch.
Eigen::VectorXd apply_mask(const Eigen::Ref<const Eigen::VectorXd>& frame,
                           const SampleMask& mask);

}  // namespace resample::sampling
