#ifndef GBT_INTERLEAVE_HPP
#define GBT_INTERLEAVE_HPP

#include <array>
#include <cstdint>

#include "gbt/bits.hpp"

namespace gbt {

// Header-preserving block interleaver over the two 60-bit halves of a
// 120-bit frame. Each half is a 4x15 matrix written row-wise (row r =
// codeword 4h+r) and read column-wise: local output 4c+r <- local input
// 15r+c. On half 0 the header fix-up swaps output positions 1<->4, 2<->8
// and 3<->12 so the four header bits stay at positions 0..3.
struct InterleaverMap {
    std::array<uint8_t, 120> perm;      // output[perm[i]] = input[i]
    std::array<uint8_t, 120> inv_perm;  // inv_perm[perm[i]] = i
};

const InterleaverMap& interleaver_map();

BitVec interleave(BitSpan frame_body);    // 120 bits in, 120 bits out
BitVec deinterleave(BitSpan frame_body);  // exact inverse

}  // namespace gbt

#endif
