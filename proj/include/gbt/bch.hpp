#ifndef GBT_BCH_HPP
#define GBT_BCH_HPP

#include <array>
#include <cstdint>
#include <utility>

#include "gbt/gf16.hpp"

namespace gbt {

// BCH(15,7,2): 7 message bits, 8 parity bits, corrects any 2 errors.
//
// Bit index i of a codeword is the coefficient of x^(14-i); the message
// occupies bits 0..6 and the parity (x^8*m(x) mod g(x)) is appended at
// bits 7..14, so bit 0 is the first message bit on the wire.
// g(x) = x^8 + x^7 + x^6 + x^4 + 1 = lcm of the minimal polynomials of
// alpha and alpha^3 over GF(2), alpha a root of x^4 + x + 1.

constexpr uint16_t kBchGenPoly = 0b111010001;
constexpr int kBchN = 15;
constexpr int kBchK = 7;
constexpr int kBchT = 2;

struct Message7 {
    // bit j (0..6) = message bit j, first transmitted bit at j = 0
    uint8_t bits = 0;
    bool bit(int j) const { return (bits >> j) & 1; }
    void set_bit(int j, bool v) { bits = uint8_t(v ? bits | (1u << j) : bits & ~(1u << j)); }
    friend bool operator==(Message7 a, Message7 b) { return (a.bits & 0x7F) == (b.bits & 0x7F); }
};

struct Codeword15 {
    // bit i (0..14) = transmitted bit i = coefficient of x^(14-i)
    uint16_t bits = 0;
    bool bit(int i) const { return (bits >> i) & 1; }
    void set_bit(int i, bool v) { bits = uint16_t(v ? bits | (1u << i) : bits & ~(1u << i)); }
    void flip_bit(int i) { bits ^= uint16_t(1u << i); }
    friend bool operator==(Codeword15 a, Codeword15 b) {
        return (a.bits & 0x7FFF) == (b.bits & 0x7FFF);
    }
};

enum class DecodeStatus : uint8_t { Clean, Corrected, Uncorrectable };

struct DecodeOutcome {
    Message7 message;        // corrected message, or raw systematic bits if uncorrectable
    int errors_corrected = 0;  // 0, 1 or 2
    DecodeStatus status = DecodeStatus::Clean;
};

Codeword15 bch_encode(Message7 msg);

// (S1, S3) with S1 = c(alpha), S3 = c(alpha^3) over the codeword polynomial
// c(x) = sum_k c_k x^k, c_k = bit (14-k). Both zero iff cw is a valid codeword.
std::pair<Gf16, Gf16> bch_syndromes(Codeword15 cw);

// Peterson direct solution for t=2 with Chien search over all 15 positions.
// Any pattern of at most 2 errors is always fully corrected; anything that
// does not resolve to a consistent 1- or 2-error pattern is flagged
// Uncorrectable and the raw systematic bits are passed through.
DecodeOutcome bch_decode(Codeword15 cw);

// All 128 codewords, indexed by message bits. Used by tests and `vectors`.
const std::array<Codeword15, 128>& bch_codeword_table();

}  // namespace gbt

#endif
