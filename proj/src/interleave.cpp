#include "gbt/interleave.hpp"

#include <stdexcept>

namespace gbt {

namespace {

InterleaverMap build_map() {
    InterleaverMap m{};
    for (int h = 0; h < 2; h++) {
        int base = 60 * h;
        for (int r = 0; r < 4; r++)
            for (int c = 0; c < 15; c++) m.perm[base + 15 * r + c] = uint8_t(base + 4 * c + r);
    }
    // header fix-up: pre-swap the header bits land at 0, 4, 8, 12
    auto swap_out = [&](int a, int b) {
        for (int i = 0; i < 60; i++) {
            if (m.perm[i] == a) m.perm[i] = uint8_t(b);
            else if (m.perm[i] == b) m.perm[i] = uint8_t(a);
        }
    };
    swap_out(1, 4);
    swap_out(2, 8);
    swap_out(3, 12);
    for (int i = 0; i < 120; i++) m.inv_perm[m.perm[i]] = uint8_t(i);
    return m;
}

}  // namespace

const InterleaverMap& interleaver_map() {
    static const InterleaverMap m = build_map();
    return m;
}

BitVec interleave(BitSpan frame_body) {
    if (frame_body.size() != 120) throw std::invalid_argument("interleave: need 120 bits");
    const auto& m = interleaver_map();
    BitVec out(120);
    for (int i = 0; i < 120; i++) out[m.perm[i]] = frame_body[i];
    return out;
}

BitVec deinterleave(BitSpan frame_body) {
    if (frame_body.size() != 120) throw std::invalid_argument("deinterleave: need 120 bits");
    const auto& m = interleaver_map();
    BitVec out(120);
    for (int i = 0; i < 120; i++) out[i] = frame_body[m.perm[i]];
    return out;
}

}  // namespace gbt
