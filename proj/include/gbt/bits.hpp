#ifndef GBT_BITS_HPP
#define GBT_BITS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gbt {

// One bit per element, value 0 or 1. Bit 0 is the first bit on the wire.
using BitVec = std::vector<uint8_t>;
using BitSpan = std::span<const uint8_t>;

// Packs bits into bytes, bit 0 -> MSB of byte 0. Trailing partial byte is
// zero-padded on the right.
std::vector<uint8_t> bits_to_bytes(BitSpan bits);

// Inverse of bits_to_bytes; n_bits limits the output length.
BitVec bytes_to_bits(std::span<const uint8_t> bytes, size_t n_bits);

size_t hamming_distance(BitSpan a, BitSpan b);

std::string to_hex(std::span<const uint8_t> bytes);
std::vector<uint8_t> from_hex(const std::string& hex);

// "0101..." helpers for tests and CLI output.
std::string bit_string(BitSpan bits);
BitVec parse_bits(const std::string& s);

}  // namespace gbt

#endif
