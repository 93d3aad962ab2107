#include "gbt/crypt.hpp"

#include <limits>
#include <stdexcept>

namespace gbt {

FrameCipherState::FrameCipherState(AesKey session_key, uint64_t nonce, uint64_t counter)
    : key_(std::move(session_key)), nonce_(nonce), counter_(counter) {
    key_.rounds();  // validate
}

void FrameCipherState::mask_frame_at(BitVec& frame120, uint64_t counter) const {
    if (frame120.size() != 120) throw std::invalid_argument("mask_frame: need 120 bits");
    AesBlock in{};
    for (int i = 0; i < 8; i++) in[i] = uint8_t(nonce_ >> (8 * (7 - i)));
    for (int i = 0; i < 8; i++) in[8 + i] = uint8_t(counter >> (8 * (7 - i)));
    AesBlock ks = aes_encrypt_block(key_, in);
    // keystream bit j = bit j of the block, MSB of byte 0 first
    for (int j = 0; j < 116; j++) {
        uint8_t b = (ks[j >> 3] >> (7 - (j & 7))) & 1;
        frame120[4 + j] ^= b;
    }
}

void FrameCipherState::mask_frame(BitVec& frame120) {
    if (counter_ == std::numeric_limits<uint64_t>::max())
        throw std::runtime_error("mask_frame: frame counter overflow, session must be re-keyed");
    mask_frame_at(frame120, counter_);
    counter_++;
}

std::vector<mpz_class> wrap_session_key(const RsaPublicKey& pub, const AesKey& key) {
    return rsa_wrap_bytes(pub, key.key_bytes);
}

AesKey unwrap_session_key(const RsaPrivateKey& priv, const std::vector<mpz_class>& chunks,
                          size_t key_len) {
    return AesKey::from_bytes(rsa_unwrap_bytes(priv, chunks, key_len));
}

}  // namespace gbt
