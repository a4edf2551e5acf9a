#include "resample/framing.hpp"

#include <string>

#include "resample/errors.hpp"

namespace resample::framing {

std::vector<Frame> split_frames(const Eigen::Ref<const Eigen::VectorXd>& samples, int frame_len) {
    if (samples.size() == 0) {
        throw EmptySignal("cannot split an empty signal");
    }
    if (frame_len <= 0) {
        throw InvalidSpec("frame_len must be positive");
    }

    const Eigen::Index n = samples.size();
    const Eigen::Index count = (n + frame_len - 1) / frame_len;
    std::vector<Frame> frames;
    frames.reserve(static_cast<std::size_t>(count));

    for (Eigen::Index f = 0; f < count; ++f) {
        const Eigen::Index start = f * frame_len;
        const Eigen::Index valid = std::min<Eigen::Index>(frame_len, n - start);
        Frame frame;
        frame.data = Eigen::VectorXd::Zero(frame_len);
        frame.data.head(valid) = samples.segment(start, valid);
        frame.index = static_cast<int>(f);
        frame.valid_len = static_cast<int>(valid);
        frames.push_back(std::move(frame));
    }
    return frames;
}

Eigen::VectorXd merge_frames(const std::vector<Frame>& frames, Eigen::Index total_len) {
    if (frames.empty()) {
        throw LengthMismatch("no frames to merge");
    }
    Eigen::Index sum = 0;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        if (frames[i].index != static_cast<int>(i)) {
            throw LengthMismatch("frames not contiguous by index at position " + std::to_string(i));
        }
        if (frames[i].valid_len < 1 || frames[i].valid_len > frames[i].data.size()) {
            throw LengthMismatch("frame " + std::to_string(i) + " has invalid valid_len");
        }
        if (i + 1 < frames.size() && frames[i].valid_len != frames[i].data.size()) {
            throw LengthMismatch("frame " + std::to_string(i) +
                                 " is partial but not the final frame");
        }
        sum += frames[i].valid_len;
    }
    if (sum != total_len) {
        throw LengthMismatch("valid lengths sum to " + std::to_string(sum) + ", expected " +
                             std::to_string(total_len));
    }

    Eigen::VectorXd out(total_len);
    Eigen::Index pos = 0;
    for (const auto& frame : frames) {
        out.segment(pos, frame.valid_len) = frame.data.head(frame.valid_len);
        pos += frame.valid_len;
    }
    return out;
}

}  // namespace resample::framing
