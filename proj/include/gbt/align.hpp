#ifndef GBT_ALIGN_HPP
#define GBT_ALIGN_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "gbt/bits.hpp"
#include "gbt/frame.hpp"

namespace gbt {

// Receiver frame synchronization: header pattern search over bit offsets,
// lock after the first header plus 32 consecutive confirmations, 1-bit slip
// per failed search step, unlock after 4 consecutive header misses.

enum class AlignPhase : uint8_t { Searching, Confirming, Locked };
enum class AlignEvent : uint8_t { Slipped, HeaderSeen, LockAcquired, HeaderMiss, LockLost, InLock };

const char* to_string(AlignEvent e);
const char* to_string(AlignPhase p);

struct AlignerConfig {
    int confirm_headers = 32;  // confirmations after the first header
    int unlock_misses = 4;     // consecutive bad headers before lock loss
};

struct AlignerState {
    AlignPhase phase = AlignPhase::Searching;
    int bit_offset = 0;        // in [0,120)
    int good_count = 0;        // confirmations since the first header, <= 32
    int bad_count = 0;         // consecutive misses while locked
    uint64_t frames_consumed = 0;  // windows examined
};

// Barrel alignment: output bit i = input bit i+offset, offset in [0,120).
BitVec right_shift(BitSpan stream, int offset);

// One step on a 120-bit candidate window at the current offset. The caller
// advances its stream position by 1 bit on Slipped and by 120 bits otherwise.
AlignEvent aligner_step(AlignerState& state, BitSpan window120,
                        const AlignerConfig& cfg = AlignerConfig{});

// conformance log line: "frame_idx event offset good bad"
std::string align_log_line(const AlignerState& post_step, AlignEvent event);

// Drives the aligner over a bitstream and hands out aligned frames.
//
// The frame on which lock is acquired is reported with deliver=false: it
// primes downstream state (the self-synchronizing descrambler) but its
// payload is not trusted. frame_index counts frames from the stream origin
// ((window_start - lock_offset) / 120), which keeps the frame cipher counter
// in sync without a resync handshake.
class FrameExtractor {
public:
    explicit FrameExtractor(AlignerConfig cfg = AlignerConfig{});

    struct Extracted {
        BitVec frame;
        uint64_t frame_index;
        bool deliver;      // false for the lock-acquiring (priming) frame
        bool header_ok;    // header pattern intact in this window
        AlignEvent event;
    };

    // Feeds more stream bits; cb is invoked for every aligned frame.
    void push(BitSpan bits, const std::function<void(const Extracted&)>& cb);

    const AlignerState& state() const { return state_; }
    uint64_t lock_events() const { return lock_events_; }
    int64_t first_lock_frame() const { return first_lock_frame_; }  // -1 if never locked

private:
    AlignerConfig cfg_;
    AlignerState state_;
    BitVec buf_;
    size_t pos_ = 0;           // absolute position of buf_[0] + consumed offset
    size_t abs_base_ = 0;      // absolute stream position of buf_[0]
    int lock_offset_ = 0;      // bit_offset captured at lock
    uint64_t lock_events_ = 0;
    int64_t first_lock_frame_ = -1;
};

}  // namespace gbt

#endif
