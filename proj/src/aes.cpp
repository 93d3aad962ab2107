#include "gbt/aes.hpp"

#include <stdexcept>

namespace gbt {

namespace {

// GF(2^8) modulo x^8 + x^4 + x^3 + x + 1
uint8_t gmul(uint8_t a, uint8_t b) {
    uint8_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a = uint8_t((a << 1) ^ ((a & 0x80) ? 0x1B : 0));
    }
    return r;
}

struct Tables {
    uint8_t sbox[256];
    uint8_t inv_sbox[256];
    uint8_t rcon[15];
    Tables() {
        // S-box = affine transform of the multiplicative inverse
        for (int i = 0; i < 256; i++) {
            uint8_t inv = 0;
            if (i) {
                for (int j = 1; j < 256; j++)
                    if (gmul(uint8_t(i), uint8_t(j)) == 1) { inv = uint8_t(j); break; }
            }
            uint8_t b = inv, s = 0x63;
            for (int k = 0; k < 5; k++) {
                s ^= b;
                b = uint8_t((b << 1) | (b >> 7));
            }
            sbox[i] = s;
        }
        for (int i = 0; i < 256; i++) inv_sbox[sbox[i]] = uint8_t(i);
        uint8_t rc = 1;
        for (int i = 1; i < 15; i++) {
            rcon[i] = rc;
            rc = gmul(rc, 2);
        }
        rcon[0] = 0;
    }
};

const Tables& tables() {
    static const Tables t;
    return t;
}

// FIPS-197 key expansion; returns 4*(Nr+1) words as bytes
std::vector<uint8_t> expand_key(const AesKey& key) {
    const Tables& t = tables();
    int nk = int(key.key_bytes.size() / 4);
    int nr = key.rounds();
    int nwords = 4 * (nr + 1);
    std::vector<uint8_t> w(size_t(nwords) * 4);
    for (size_t i = 0; i < key.key_bytes.size(); i++) w[i] = key.key_bytes[i];
    for (int i = nk; i < nwords; i++) {
        uint8_t tmp[4];
        for (int j = 0; j < 4; j++) tmp[j] = w[size_t(i - 1) * 4 + j];
        if (i % nk == 0) {
            uint8_t first = tmp[0];  // RotWord then SubWord then Rcon
            tmp[0] = uint8_t(t.sbox[tmp[1]] ^ t.rcon[i / nk]);
            tmp[1] = t.sbox[tmp[2]];
            tmp[2] = t.sbox[tmp[3]];
            tmp[3] = t.sbox[first];
        } else if (nk > 6 && i % nk == 4) {
            for (int j = 0; j < 4; j++) tmp[j] = t.sbox[tmp[j]];
        }
        for (int j = 0; j < 4; j++) w[size_t(i) * 4 + j] = uint8_t(w[size_t(i - nk) * 4 + j] ^ tmp[j]);
    }
    return w;
}

// state byte order matches the block: s[4*c + r] = column c, row r
void add_round_key(AesBlock& s, const uint8_t* rk) {
    for (int i = 0; i < 16; i++) s[i] ^= rk[i];
}

void sub_bytes(AesBlock& s, const uint8_t* box) {
    for (auto& b : s) b = box[b];
}

void shift_rows(AesBlock& s) {
    AesBlock t = s;
    for (int r = 1; r < 4; r++)
        for (int c = 0; c < 4; c++) s[4 * c + r] = t[4 * ((c + r) % 4) + r];
}

void inv_shift_rows(AesBlock& s) {
    AesBlock t = s;
    for (int r = 1; r < 4; r++)
        for (int c = 0; c < 4; c++) s[4 * ((c + r) % 4) + r] = t[4 * c + r];
}

void mix_columns(AesBlock& s) {
    for (int c = 0; c < 4; c++) {
        uint8_t* col = &s[4 * c];
        uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
        col[0] = uint8_t(gmul(a0, 2) ^ gmul(a1, 3) ^ a2 ^ a3);
        col[1] = uint8_t(a0 ^ gmul(a1, 2) ^ gmul(a2, 3) ^ a3);
        col[2] = uint8_t(a0 ^ a1 ^ gmul(a2, 2) ^ gmul(a3, 3));
        col[3] = uint8_t(gmul(a0, 3) ^ a1 ^ a2 ^ gmul(a3, 2));
    }
}

void inv_mix_columns(AesBlock& s) {
    for (int c = 0; c < 4; c++) {
        uint8_t* col = &s[4 * c];
        uint8_t a0 = col[0], a1 = col[1], a2 = col[2], a3 = col[3];
        col[0] = uint8_t(gmul(a0, 14) ^ gmul(a1, 11) ^ gmul(a2, 13) ^ gmul(a3, 9));
        col[1] = uint8_t(gmul(a0, 9) ^ gmul(a1, 14) ^ gmul(a2, 11) ^ gmul(a3, 13));
        col[2] = uint8_t(gmul(a0, 13) ^ gmul(a1, 9) ^ gmul(a2, 14) ^ gmul(a3, 11));
        col[3] = uint8_t(gmul(a0, 11) ^ gmul(a1, 13) ^ gmul(a2, 9) ^ gmul(a3, 14));
    }
}

}  // namespace

int AesKey::rounds() const {
    switch (key_bytes.size()) {
        case 16: return 10;
        case 24: return 12;
        case 32: return 14;
        default: throw std::invalid_argument("AesKey: key must be 16, 24 or 32 bytes");
    }
}

AesKey AesKey::from_bytes(std::vector<uint8_t> bytes) {
    AesKey k{std::move(bytes)};
    k.rounds();  // validates length
    return k;
}

AesBlock aes_encrypt_block(const AesKey& key, const AesBlock& block) {
    const Tables& t = tables();
    auto w = expand_key(key);
    int nr = key.rounds();
    AesBlock s = block;
    add_round_key(s, &w[0]);
    for (int round = 1; round < nr; round++) {
        sub_bytes(s, t.sbox);
        shift_rows(s);
        mix_columns(s);
        add_round_key(s, &w[size_t(round) * 16]);
    }
    sub_bytes(s, t.sbox);
    shift_rows(s);
    add_round_key(s, &w[size_t(nr) * 16]);
    return s;
}

AesBlock aes_decrypt_block(const AesKey& key, const AesBlock& block) {
    const Tables& t = tables();
    auto w = expand_key(key);
    int nr = key.rounds();
    AesBlock s = block;
    add_round_key(s, &w[size_t(nr) * 16]);
    for (int round = nr - 1; round >= 1; round--) {
        inv_shift_rows(s);
        sub_bytes(s, t.inv_sbox);
        add_round_key(s, &w[size_t(round) * 16]);
        inv_mix_columns(s);
    }
    inv_shift_rows(s);
    sub_bytes(s, t.inv_sbox);
    add_round_key(s, &w[0]);
    return s;
}

}  // namespace gbt
