#include "gbt/align.hpp"

#include <stdexcept>

namespace gbt {

const char* to_string(AlignEvent e) {
    switch (e) {
        case AlignEvent::Slipped: return "Slipped";
        case AlignEvent::HeaderSeen: return "HeaderSeen";
        case AlignEvent::LockAcquired: return "LockAcquired";
        case AlignEvent::HeaderMiss: return "HeaderMiss";
        case AlignEvent::LockLost: return "LockLost";
        case AlignEvent::InLock: return "InLock";
    }
    return "?";
}

const char* to_string(AlignPhase p) {
    switch (p) {
        case AlignPhase::Searching: return "Searching";
        case AlignPhase::Confirming: return "Confirming";
        case AlignPhase::Locked: return "Locked";
    }
    return "?";
}

BitVec right_shift(BitSpan stream, int offset) {
    if (offset < 0 || offset >= kFrameBits)
        throw std::invalid_argument("right_shift: offset must be in [0,120)");
    if (size_t(offset) > stream.size()) return {};
    return BitVec(stream.begin() + offset, stream.end());
}

AlignEvent aligner_step(AlignerState& state, BitSpan window120, const AlignerConfig& cfg) {
    if (window120.size() != size_t(kFrameBits))
        throw std::invalid_argument("aligner_step: window must be 120 bits");
    state.frames_consumed++;
    bool ok = header_matches(window120.subspan(0, 4));

    switch (state.phase) {
        case AlignPhase::Searching:
            if (ok) {
                state.phase = AlignPhase::Confirming;
                state.good_count = 0;
                state.bad_count = 0;
                return AlignEvent::HeaderSeen;
            }
            state.bit_offset = (state.bit_offset + 1) % kFrameBits;
            return AlignEvent::Slipped;

        case AlignPhase::Confirming:
            if (ok) {
                state.good_count++;
                if (state.good_count >= cfg.confirm_headers) {
                    state.phase = AlignPhase::Locked;
                    state.bad_count = 0;
                    return AlignEvent::LockAcquired;
                }
                return AlignEvent::HeaderSeen;
            }
            state.phase = AlignPhase::Searching;
            state.good_count = 0;
            state.bit_offset = (state.bit_offset + 1) % kFrameBits;
            return AlignEvent::Slipped;

        case AlignPhase::Locked:
            if (ok) {
                state.bad_count = 0;
                return AlignEvent::InLock;
            }
            state.bad_count++;
            if (state.bad_count >= cfg.unlock_misses) {
                state.phase = AlignPhase::Searching;
                state.good_count = 0;
                return AlignEvent::LockLost;
            }
            return AlignEvent::HeaderMiss;
    }
    return AlignEvent::Slipped;  // unreachable
}

std::string align_log_line(const AlignerState& post_step, AlignEvent event) {
    return std::to_string(post_step.frames_consumed) + " " + to_string(event) + " " +
           std::to_string(post_step.bit_offset) + " " + std::to_string(post_step.good_count) +
           " " + std::to_string(post_step.bad_count);
}

FrameExtractor::FrameExtractor(AlignerConfig cfg) : cfg_(cfg) {}

void FrameExtractor::push(BitSpan bits, const std::function<void(const Extracted&)>& cb) {
    buf_.insert(buf_.end(), bits.begin(), bits.end());
    while (pos_ + kFrameBits <= buf_.size()) {
        size_t abs_start = abs_base_ + pos_;
        BitSpan window(buf_.data() + pos_, kFrameBits);
        AlignEvent ev = aligner_step(state_, window, cfg_);

        if (ev == AlignEvent::Slipped) {
            pos_ += 1;
            continue;
        }
        if (ev == AlignEvent::LockAcquired) {
            lock_offset_ = state_.bit_offset;
            lock_events_++;
        }
        if (state_.phase == AlignPhase::Locked || ev == AlignEvent::LockLost) {
            uint64_t frame_index = (abs_start - size_t(lock_offset_)) / kFrameBits;
            if (ev == AlignEvent::LockAcquired && first_lock_frame_ < 0)
                first_lock_frame_ = int64_t(frame_index);
            if (ev != AlignEvent::LockLost) {
                Extracted ex;
                ex.frame.assign(window.begin(), window.end());
                ex.frame_index = frame_index;
                ex.deliver = (ev != AlignEvent::LockAcquired);
                ex.header_ok = (ev != AlignEvent::HeaderMiss);
                ex.event = ev;
                cb(ex);
            }
        }
        pos_ += kFrameBits;
    }
    // drop consumed prefix
    if (pos_ > 8192) {
        buf_.erase(buf_.begin(), buf_.begin() + long(pos_));
        abs_base_ += pos_;
        pos_ = 0;
    }
}

}  // namespace gbt
