#ifndef GBT_SCRAMBLE_HPP
#define GBT_SCRAMBLE_HPP

#include <array>
#include <cstdint>

#include "gbt/bits.hpp"

namespace gbt {

// Multiplicative (self-synchronizing) scrambler over the primitive
// polynomial x^13 + x^4 + x^3 + x + 1:
//
//   scrambler:   y[n] = x[n] ^ y[n-1] ^ y[n-3] ^ y[n-4] ^ y[n-13]
//   descrambler: x[n] = y[n] ^ y[n-1] ^ y[n-3] ^ y[n-4] ^ y[n-13]
//
// The scrambler keeps its own output as history, the descrambler keeps the
// received input, so the receiver resynchronizes after any 13 clean bits.

constexpr uint16_t kScramblerSeedDefault = 0x1555;
constexpr int kScramblerDegree = 13;

class ScramblerLane {
public:
    // seed = initial 13-bit history, must be nonzero; bit 0 = most recent bit
    explicit ScramblerLane(uint16_t seed = kScramblerSeedDefault);

    uint8_t scramble_bit(uint8_t x);
    uint8_t descramble_bit(uint8_t y);

    uint16_t history() const { return hist_; }
    void reset(uint16_t seed);

private:
    uint8_t taps() const;
    uint16_t hist_;
    uint16_t seed_;
};

BitVec scramble_lane(ScramblerLane& lane, BitSpan input);
BitVec descramble_lane(ScramblerLane& lane, BitSpan input);

// Four independent lanes, persistent across frames.
class LaneBank {
public:
    explicit LaneBank(const std::array<uint16_t, 4>& seeds = {
                          kScramblerSeedDefault, kScramblerSeedDefault,
                          kScramblerSeedDefault, kScramblerSeedDefault});

    // Splits the payload into 4 contiguous equal blocks, block k through
    // lane k (52 bits -> 4x13, 116 bits -> 4x29). Length must be divisible
    // by 4.
    BitVec scramble_payload(BitSpan payload);
    BitVec descramble_payload(BitSpan payload);

    ScramblerLane& lane(int k) { return lanes_[k]; }

private:
    std::array<ScramblerLane, 4> lanes_;
};

}  // namespace gbt

#endif
