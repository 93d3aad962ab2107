#include "gbt/frame.hpp"

#include <algorithm>
#include <stdexcept>

namespace gbt {

const std::array<uint8_t, 4>& header_pattern(FrameMode mode) {
    return mode == FrameMode::Standard ? kHeaderStandard : kHeaderNoFec;
}

bool header_matches(BitSpan first4, FrameMode* mode_out) {
    if (first4.size() < 4) return false;
    auto eq = [&](const std::array<uint8_t, 4>& pat) {
        for (int i = 0; i < 4; i++)
            if ((first4[i] & 1) != pat[i]) return false;
        return true;
    };
    if (eq(kHeaderStandard)) {
        if (mode_out) *mode_out = FrameMode::Standard;
        return true;
    }
    if (eq(kHeaderNoFec)) {
        if (mode_out) *mode_out = FrameMode::NoFec;
        return true;
    }
    return false;
}

BitVec pack_frame(BitSpan header, BitSpan body116) {
    if (header.size() != kHeaderBits) throw std::invalid_argument("pack_frame: header must be 4 bits");
    if (!header_matches(header)) throw std::invalid_argument("pack_frame: unknown header pattern");
    if (body116.size() != kBodyBits) throw std::invalid_argument("pack_frame: body must be 116 bits");
    BitVec frame(kFrameBits);
    std::copy(header.begin(), header.end(), frame.begin());
    std::copy(body116.begin(), body116.end(), frame.begin() + kHeaderBits);
    return frame;
}

std::pair<BitVec, BitVec> unpack_frame(BitSpan frame120) {
    if (frame120.size() != kFrameBits) throw std::invalid_argument("unpack_frame: need 120 bits");
    BitVec header(frame120.begin(), frame120.begin() + kHeaderBits);
    BitVec body(frame120.begin() + kHeaderBits, frame120.end());
    return {std::move(header), std::move(body)};
}

std::array<Word40, 3> mux_words(BitSpan frame120) {
    if (frame120.size() != kFrameBits) throw std::invalid_argument("mux_words: need 120 bits");
    std::array<Word40, 3> words{};
    for (int w = 0; w < 3; w++)
        for (int i = 0; i < kWordBits; i++) words[w].bits[i] = frame120[w * kWordBits + i];
    return words;
}

BitVec demux_words(const std::array<Word40, 3>& words) {
    BitVec frame(kFrameBits);
    for (int w = 0; w < 3; w++)
        for (int i = 0; i < kWordBits; i++) frame[w * kWordBits + i] = words[w].bits[i];
    return frame;
}

std::array<uint8_t, kFrameBytes> frame_to_bytes(BitSpan frame120) {
    if (frame120.size() != kFrameBits) throw std::invalid_argument("frame_to_bytes: need 120 bits");
    std::array<uint8_t, kFrameBytes> out{};
    auto bytes = bits_to_bytes(frame120);
    std::copy(bytes.begin(), bytes.end(), out.begin());
    return out;
}

BitVec frame_from_bytes(std::span<const uint8_t> bytes15) {
    if (bytes15.size() != kFrameBytes) throw std::invalid_argument("frame_from_bytes: need 15 bytes");
    return bytes_to_bits(bytes15, kFrameBits);
}

int payload_bits(FrameMode mode) {
    return mode == FrameMode::Standard ? kStdPayloadBits : kNoFecPayloadBits;
}

Throughput throughput(const LinkTiming& timing, FrameMode mode) {
    Throughput t{};
    t.payload_bps = timing.frame_clock_hz * payload_bits(mode);
    t.line_bps = timing.line_rate_bps();
    t.efficiency = t.payload_bps / t.line_bps;
    return t;
}

}  // namespace gbt
