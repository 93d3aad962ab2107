#include "gbt/rsa.hpp"

#include <stdexcept>

namespace gbt {

namespace {

size_t nbits(const mpz_class& v) { return mpz_sizeinbase(v.get_mpz_t(), 2); }

}  // namespace

RsaKeyPair rsa_keygen(const mpz_class& p, const mpz_class& q, const mpz_class& e) {
    if (p == q) throw std::invalid_argument("rsa_keygen: p and q must differ");
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0 || mpz_probab_prime_p(q.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("rsa_keygen: p and q must be prime");
    mpz_class p1 = p - 1, q1 = q - 1;
    mpz_class lambda;
    mpz_lcm(lambda.get_mpz_t(), p1.get_mpz_t(), q1.get_mpz_t());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), lambda.get_mpz_t());
    if (g != 1) throw std::invalid_argument("rsa_keygen: e not coprime to lcm(p-1,q-1)");
    mpz_class phi = p1 * q1;
    mpz_class d;
    if (mpz_invert(d.get_mpz_t(), e.get_mpz_t(), phi.get_mpz_t()) == 0)
        throw std::invalid_argument("rsa_keygen: e not invertible");
    RsaKeyPair kp;
    kp.pub = {p * q, e};
    kp.priv = {p * q, d};
    kp.p = p;
    kp.q = q;
    return kp;
}

mpz_class rsa_encrypt(const RsaPublicKey& pub, const mpz_class& m) {
    if (m < 0 || m >= pub.n) throw std::invalid_argument("rsa_encrypt: message out of range");
    mpz_class c;
    mpz_powm(c.get_mpz_t(), m.get_mpz_t(), pub.e.get_mpz_t(), pub.n.get_mpz_t());
    return c;
}

mpz_class rsa_decrypt(const RsaPrivateKey& priv, const mpz_class& c) {
    if (c < 0 || c >= priv.n) throw std::invalid_argument("rsa_decrypt: ciphertext out of range");
    mpz_class m;
    mpz_powm(m.get_mpz_t(), c.get_mpz_t(), priv.d.get_mpz_t(), priv.n.get_mpz_t());
    return m;
}

std::vector<mpz_class> rsa_wrap_bytes(const RsaPublicKey& pub,
                                      const std::vector<uint8_t>& key_bytes) {
    size_t key_bits = key_bytes.size() * 8;
    size_t chunk_bits = nbits(pub.n) - 1;
    if (chunk_bits == 0) throw std::invalid_argument("rsa_wrap_bytes: modulus too small");
    size_t n_chunks = (key_bits + chunk_bits - 1) / chunk_bits;

    // big-endian key integer, split from the most significant end
    mpz_class key_int = 0;
    for (uint8_t b : key_bytes) key_int = (key_int << 8) | b;

    std::vector<mpz_class> out;
    out.reserve(n_chunks);
    for (size_t i = 0; i < n_chunks; i++) {
        size_t hi = key_bits - i * chunk_bits;
        size_t lo = hi > chunk_bits ? hi - chunk_bits : 0;
        mpz_class chunk = (key_int >> lo) & ((mpz_class(1) << (hi - lo)) - 1);
        out.push_back(rsa_encrypt(pub, chunk));
    }
    return out;
}

std::vector<uint8_t> rsa_unwrap_bytes(const RsaPrivateKey& priv,
                                      const std::vector<mpz_class>& chunks, size_t key_len) {
    size_t key_bits = key_len * 8;
    size_t chunk_bits = nbits(priv.n) - 1;
    size_t n_chunks = (key_bits + chunk_bits - 1) / chunk_bits;
    if (chunks.size() != n_chunks) throw std::invalid_argument("rsa_unwrap_bytes: chunk count mismatch");

    mpz_class key_int = 0;
    for (size_t i = 0; i < n_chunks; i++) {
        size_t hi = key_bits - i * chunk_bits;
        size_t lo = hi > chunk_bits ? hi - chunk_bits : 0;
        key_int |= rsa_decrypt(priv, chunks[i]) << lo;
    }
    std::vector<uint8_t> out(key_len);
    for (size_t i = 0; i < key_len; i++) {
        mpz_class b = (key_int >> (8 * (key_len - 1 - i))) & 0xFF;
        out[i] = uint8_t(b.get_ui());
    }
    return out;
}

const RsaKeyPair& rsa_test_keypair() {
    static const RsaKeyPair kp = [] {
        mpz_class base_p, base_q, p, q;
        base_p = "0xdeadbeef0123456789abcdef02468ace";
        base_q = "0xcafef00d9876543210fedcba13579bdf";
        mpz_nextprime(p.get_mpz_t(), base_p.get_mpz_t());
        mpz_nextprime(q.get_mpz_t(), base_q.get_mpz_t());
        return rsa_keygen(p, q, 65537);
    }();
    return kp;
}

}  // namespace gbt
