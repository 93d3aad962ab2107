#ifndef GBT_RSA_HPP
#define GBT_RSA_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace gbt {

// Textbook RSA (no padding). This is a protocol emulator, not a production
// cryptosystem; RSA is used only to wrap the AES session key.

struct RsaPublicKey {
    mpz_class n;
    mpz_class e;
};

struct RsaPrivateKey {
    mpz_class n;
    mpz_class d;
};

struct RsaKeyPair {
    RsaPublicKey pub;
    RsaPrivateKey priv;
    mpz_class p, q;
};

// p, q distinct primes, gcd(e, lcm(p-1, q-1)) = 1. d is computed as the
// inverse of e modulo (p-1)(q-1), which also satisfies e*d = 1 mod lcm.
RsaKeyPair rsa_keygen(const mpz_class& p, const mpz_class& q, const mpz_class& e);

mpz_class rsa_encrypt(const RsaPublicKey& pub, const mpz_class& m);
mpz_class rsa_decrypt(const RsaPrivateKey& priv, const mpz_class& c);

// Wraps a key of key_bits bits by splitting it into ceil(key_bits /
// (bits(n)-1)) big-endian chunks, each encrypted separately. One chunk when
// the modulus is large enough.
std::vector<mpz_class> rsa_wrap_bytes(const RsaPublicKey& pub,
                                      const std::vector<uint8_t>& key_bytes);
std::vector<uint8_t> rsa_unwrap_bytes(const RsaPrivateKey& priv,
                                      const std::vector<mpz_class>& chunks, size_t key_len);

// Deterministic keypair for tests and default CLI config: p, q are the next
// primes above two fixed 128-bit values, e = 65537.
const RsaKeyPair& rsa_test_keypair();

}  // namespace gbt

#endif
