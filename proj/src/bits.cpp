#include "gbt/bits.hpp"

#include <stdexcept>

namespace gbt {

std::vector<uint8_t> bits_to_bytes(BitSpan bits) {
    std::vector<uint8_t> out((bits.size() + 7) / 8, 0);
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i]) out[i >> 3] |= uint8_t(0x80u >> (i & 7));
    }
    return out;
}

BitVec bytes_to_bits(std::span<const uint8_t> bytes, size_t n_bits) {
    if (n_bits > bytes.size() * 8) throw std::invalid_argument("bytes_to_bits: not enough bytes");
    BitVec out(n_bits);
    for (size_t i = 0; i < n_bits; i++) {
        out[i] = (bytes[i >> 3] >> (7 - (i & 7))) & 1;
    }
    return out;
}

size_t hamming_distance(BitSpan a, BitSpan b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    size_t d = 0;
    for (size_t i = 0; i < a.size(); i++) d += (a[i] ^ b[i]) & 1;
    return d;
}

static int hex_val(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::string to_hex(std::span<const uint8_t> bytes) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 15]);
    }
    return s;
}

std::vector<uint8_t> from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("from_hex: odd length");
    std::vector<uint8_t> out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); i++) {
        int hi = hex_val(hex[2 * i]), lo = hex_val(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("from_hex: bad digit");
        out[i] = uint8_t(hi << 4 | lo);
    }
    return out;
}

std::string bit_string(BitSpan bits) {
    std::string s(bits.size(), '0');
    for (size_t i = 0; i < bits.size(); i++)
        if (bits[i]) s[i] = '1';
    return s;
}

BitVec parse_bits(const std::string& s) {
    BitVec out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '0' || c == '1') out.push_back(uint8_t(c - '0'));
        else if (c != ' ' && c != '_') throw std::invalid_argument("parse_bits: bad char");
    }
    return out;
}

}  // namespace gbt
