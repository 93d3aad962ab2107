#include "gbt/scramble.hpp"

#include <stdexcept>

namespace gbt {

ScramblerLane::ScramblerLane(uint16_t seed) : hist_(0), seed_(0) { reset(seed); }

void ScramblerLane::reset(uint16_t seed) {
    seed &= 0x1FFF;
    if (seed == 0) throw std::invalid_argument("ScramblerLane: seed must be nonzero");
    hist_ = seed;
    seed_ = seed;
}

uint8_t ScramblerLane::taps() const {
    // y[n-1] ^ y[n-3] ^ y[n-4] ^ y[n-13]; history bit k holds y[n-1-k]
    return uint8_t((hist_ ^ (hist_ >> 2) ^ (hist_ >> 3) ^ (hist_ >> 12)) & 1);
}

uint8_t ScramblerLane::scramble_bit(uint8_t x) {
    uint8_t y = uint8_t((x & 1) ^ taps());
    hist_ = uint16_t(((hist_ << 1) | y) & 0x1FFF);
    return y;
}

uint8_t ScramblerLane::descramble_bit(uint8_t y) {
    uint8_t x = uint8_t((y & 1) ^ taps());
    hist_ = uint16_t(((hist_ << 1) | (y & 1)) & 0x1FFF);
    return x;
}

BitVec scramble_lane(ScramblerLane& lane, BitSpan input) {
    BitVec out(input.size());
    for (size_t i = 0; i < input.size(); i++) out[i] = lane.scramble_bit(input[i]);
    return out;
}

BitVec descramble_lane(ScramblerLane& lane, BitSpan input) {
    BitVec out(input.size());
    for (size_t i = 0; i < input.size(); i++) out[i] = lane.descramble_bit(input[i]);
    return out;
}

LaneBank::LaneBank(const std::array<uint16_t, 4>& seeds)
    : lanes_{ScramblerLane(seeds[0]), ScramblerLane(seeds[1]), ScramblerLane(seeds[2]),
             ScramblerLane(seeds[3])} {}

BitVec LaneBank::scramble_payload(BitSpan payload) {
    if (payload.size() % 4 != 0)
        throw std::invalid_argument("scramble_payload: length not divisible by 4");
    size_t block = payload.size() / 4;
    BitVec out(payload.size());
    for (int k = 0; k < 4; k++)
        for (size_t i = 0; i < block; i++)
            out[k * block + i] = lanes_[k].scramble_bit(payload[k * block + i]);
    return out;
}

BitVec LaneBank::descramble_payload(BitSpan payload) {
    if (payload.size() % 4 != 0)
        throw std::invalid_argument("descramble_payload: length not divisible by 4");
    size_t block = payload.size() / 4;
    BitVec out(payload.size());
    for (int k = 0; k < 4; k++)
        for (size_t i = 0; i < block; i++)
            out[k * block + i] = lanes_[k].descramble_bit(payload[k * block + i]);
    return out;
}

}  // namespace gbt
