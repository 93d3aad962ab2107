#ifndef GBT_FRAME_HPP
#define GBT_FRAME_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "gbt/bits.hpp"

namespace gbt {

// 120-bit frame, both formats:
//   standard: header 1010 | slow control (4) | data (48) | FEC (64)
//   no-FEC:   header 0101 | slow control (4) | data (112)
// The 116-bit body layout is SC first, then data/FEC as produced by the
// encode and interleave stages. Frame bit 0 is transmitted first.

enum class FrameMode : uint8_t { Standard = 0, NoFec = 1 };

constexpr int kFrameBits = 120;
constexpr int kFrameBytes = 15;
constexpr int kHeaderBits = 4;
constexpr int kBodyBits = 116;
constexpr int kScBits = 4;
constexpr int kStdDataBits = 48;
constexpr int kStdPayloadBits = 52;   // SC + data
constexpr int kNoFecPayloadBits = 116;  // SC + extended data
constexpr int kWordBits = 40;

// header patterns, bit 0 first: standard 1010, no-FEC 0101
constexpr std::array<uint8_t, 4> kHeaderStandard = {1, 0, 1, 0};
constexpr std::array<uint8_t, 4> kHeaderNoFec = {0, 1, 0, 1};

const std::array<uint8_t, 4>& header_pattern(FrameMode mode);
bool header_matches(BitSpan first4, FrameMode* mode_out = nullptr);

BitVec pack_frame(BitSpan header, BitSpan body116);
// returns (header, body)
std::pair<BitVec, BitVec> unpack_frame(BitSpan frame120);

struct Word40 {
    std::array<uint8_t, kWordBits> bits{};
};

std::array<Word40, 3> mux_words(BitSpan frame120);
BitVec demux_words(const std::array<Word40, 3>& words);

// 15-byte wire serialization: bit 0 = MSB of byte 0
std::array<uint8_t, kFrameBytes> frame_to_bytes(BitSpan frame120);
BitVec frame_from_bytes(std::span<const uint8_t> bytes15);

struct LinkTiming {
    double frame_clock_hz = 40e6;
    double serial_clock_hz = 120e6;
    double line_rate_bps() const { return frame_clock_hz * kFrameBits; }
};

struct Throughput {
    double payload_bps;
    double line_bps;
    double efficiency;
};

int payload_bits(FrameMode mode);
Throughput throughput(const LinkTiming& timing, FrameMode mode);

}  // namespace gbt

#endif
