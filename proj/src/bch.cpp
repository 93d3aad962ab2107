#include "gbt/bch.hpp"

namespace gbt {

namespace {

// codeword polynomial (bit k = coeff of x^k) <-> wire bits (bit i = coeff x^(14-i))
uint16_t wire_to_poly(uint16_t wire) {
    uint16_t p = 0;
    for (int i = 0; i < kBchN; i++)
        if ((wire >> i) & 1) p |= uint16_t(1u << (kBchN - 1 - i));
    return p;
}

uint16_t poly_to_wire(uint16_t p) { return wire_to_poly(p); }  // involution

uint16_t poly_mod_g(uint32_t a) {
    for (int d = 14; d >= 8; d--)
        if (a & (1u << d)) a ^= uint32_t(kBchGenPoly) << (d - 8);
    return uint16_t(a);
}

}  // namespace

Codeword15 bch_encode(Message7 msg) {
    // m(x) has degree <= 6 with message bit 0 as the x^6 coefficient
    uint16_t mpoly = 0;
    for (int j = 0; j < kBchK; j++)
        if (msg.bit(j)) mpoly |= uint16_t(1u << (kBchK - 1 - j));
    uint32_t shifted = uint32_t(mpoly) << 8;
    uint16_t cw_poly = uint16_t(shifted | poly_mod_g(shifted));
    return Codeword15{poly_to_wire(cw_poly)};
}

std::pair<Gf16, Gf16> bch_syndromes(Codeword15 cw) {
    uint16_t p = wire_to_poly(cw.bits);
    Gf16 s1, s3;
    for (int k = 0; k < kBchN; k++) {
        if ((p >> k) & 1) {
            s1 = s1 + Gf16::alpha_pow(k);
            s3 = s3 + Gf16::alpha_pow(3 * k);
        }
    }
    return {s1, s3};
}

DecodeOutcome bch_decode(Codeword15 cw) {
    auto extract_msg = [](Codeword15 c) {
        Message7 m;
        m.bits = uint8_t(c.bits & 0x7F);
        return m;
    };

    auto [s1, s3] = bch_syndromes(cw);
    if (s1.is_zero() && s3.is_zero()) {
        return {extract_msg(cw), 0, DecodeStatus::Clean};
    }

    DecodeOutcome bad{extract_msg(cw), 0, DecodeStatus::Uncorrectable};
    if (s1.is_zero()) return bad;  // S1=0, S3!=0: no 1- or 2-error pattern fits

    Gf16 s1_cubed = s1 * s1 * s1;
    uint16_t p = wire_to_poly(cw.bits);

    if (s3 == s1_cubed) {
        // single error at the degree position whose alpha-power equals S1
        int k = s1.log();
        Codeword15 fixed{poly_to_wire(uint16_t(p ^ (1u << k)))};
        return {extract_msg(fixed), 1, DecodeStatus::Corrected};
    }

    // sigma(x) = 1 + S1*x + ((S3 + S1^3)/S1)*x^2, roots found by Chien search
    // (evaluate at alpha^-k for every position k)
    Gf16 sigma2 = (s3 + s1_cubed) * s1.inv();
    int roots[2];
    int n_roots = 0;
    for (int k = 0; k < kBchN; k++) {
        Gf16 x = Gf16::alpha_pow(-k);
        Gf16 v = Gf16(1) + s1 * x + sigma2 * x * x;
        if (v.is_zero()) {
            if (n_roots == 2) return bad;  // more than 2 roots: inconsistent
            roots[n_roots++] = k;
        }
    }
    if (n_roots != 2) return bad;

    uint16_t fixed_poly = uint16_t(p ^ (1u << roots[0]) ^ (1u << roots[1]));
    Codeword15 fixed{poly_to_wire(fixed_poly)};
    auto [r1, r3] = bch_syndromes(fixed);
    if (!r1.is_zero() || !r3.is_zero()) return bad;
    return {extract_msg(fixed), 2, DecodeStatus::Corrected};
}

const std::array<Codeword15, 128>& bch_codeword_table() {
    static const std::array<Codeword15, 128> table = [] {
        std::array<Codeword15, 128> t{};
        for (int m = 0; m < 128; m++) t[m] = bch_encode(Message7{uint8_t(m)});
        return t;
    }();
    return table;
}

}  // namespace gbt
