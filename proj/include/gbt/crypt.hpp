#ifndef GBT_CRYPT_HPP
#define GBT_CRYPT_HPP

#include <cstdint>

#include "gbt/aes.hpp"
#include "gbt/bits.hpp"
#include "gbt/rsa.hpp"

namespace gbt {

// Frame-size-preserving keystream masking: per frame, the keystream is
// aes_encrypt_block(key, nonce || counter) and its first 116 bits are XORed
// into frame bits 4..119. The header stays in clear so the aligner keeps
// working; applying the same state on both ends decrypts.
class FrameCipherState {
public:
    FrameCipherState(AesKey session_key, uint64_t nonce, uint64_t counter = 0);

    // masks in place and advances the counter
    void mask_frame(BitVec& frame120);
    // masks with an explicit counter, does not advance internal state
    void mask_frame_at(BitVec& frame120, uint64_t counter) const;

    uint64_t counter() const { return counter_; }
    void set_counter(uint64_t c) { counter_ = c; }
    uint64_t nonce() const { return nonce_; }
    const AesKey& key() const { return key_; }

private:
    AesKey key_;
    uint64_t nonce_;
    uint64_t counter_;
};

// session-key wrap: AES key bytes through the RSA chunking path
std::vector<mpz_class> wrap_session_key(const RsaPublicKey& pub, const AesKey& key);
AesKey unwrap_session_key(const RsaPrivateKey& priv, const std::vector<mpz_class>& chunks,
                          size_t key_len);

}  // namespace gbt

#endif
