#ifndef GBT_AES_HPP
#define GBT_AES_HPP

#include <array>
#include <cstdint>
#include <vector>

namespace gbt {

// AES block cipher, all three key sizes: 10 rounds for a 16-byte key,
// 12 for 24, 14 for 32 (block size fixed at 128 bits).
struct AesKey {
    std::vector<uint8_t> key_bytes;  // 16, 24 or 32 bytes

    int rounds() const;
    static AesKey from_bytes(std::vector<uint8_t> bytes);
};

using AesBlock = std::array<uint8_t, 16>;

AesBlock aes_encrypt_block(const AesKey& key, const AesBlock& block);
AesBlock aes_decrypt_block(const AesKey& key, const AesBlock& block);

}  // namespace gbt

#endif
