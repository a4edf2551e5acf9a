#pragma once

#include <Eigen/Dense>
#include <vector>

namespace resample::framing {

// Fixed-length processing unit. The padding region beyond valid_len is all
// zeros on creation; metrics are computed over valid_len only.
struct Frame {
    Eigen::VectorXd data;   // length == frame_len
    int index = 0;          // ordinal position in the source signal
    int valid_len = 0;      // non-padding sample count, in [1, frame_len]
};

// Non-overlapping split into ceil(n / frame_len) frames; the last frame is
// zero-padded with valid_len recording the true tail length.
// Throws EmptySignal.
std::vector<Frame> split_frames(const Eigen::Ref<const Eigen::VectorXd>& samples,
                                int frame_len = 1024);

// Concatenates the first valid_len samples of each frame. Frames must be
// contiguous by index and their valid_len must sum to total_len.
// Throws LengthMismatch.
Eigen::VectorXd merge_frames(const std::vector<Frame>& frames, Eigen::Index total_len);

}  // namespace resample::framing
