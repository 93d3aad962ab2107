#ifndef GBT_GF16_HPP
#define GBT_GF16_HPP

#include <array>
#include <cstdint>
#include <stdexcept>

namespace gbt {

// GF(2^4) in polynomial basis modulo x^4 + x + 1. Elements are 4-bit values;
// alpha = x (value 2) generates the multiplicative group of order 15.
class Gf16 {
public:
    static constexpr uint8_t kPrimPoly = 0b10011;  // x^4 + x + 1

    constexpr Gf16() : v_(0) {}
    constexpr explicit Gf16(uint8_t v) : v_(v) {
        if (v > 15) throw std::domain_error("Gf16: value out of range");
    }

    constexpr uint8_t value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr Gf16 operator+(Gf16 a, Gf16 b) { return Gf16(uint8_t(a.v_ ^ b.v_)); }
    friend constexpr Gf16 operator*(Gf16 a, Gf16 b) {
        uint8_t r = 0, x = a.v_, y = b.v_;
        while (y) {
            if (y & 1) r ^= x;
            y >>= 1;
            x <<= 1;
            if (x & 0x10) x ^= kPrimPoly;
        }
        return Gf16(uint8_t(r & 0x0F));
    }
    friend constexpr bool operator==(Gf16 a, Gf16 b) { return a.v_ == b.v_; }

    // alpha^e, exponent taken mod 15
    static constexpr Gf16 alpha_pow(int e) {
        e %= 15;
        if (e < 0) e += 15;
        Gf16 r(1);
        const Gf16 a(2);
        for (int i = 0; i < e; i++) r = r * a;
        return r;
    }

    // discrete log base alpha; input must be nonzero
    constexpr int log() const {
        if (v_ == 0) throw std::domain_error("Gf16: log of zero");
        Gf16 r(1);
        const Gf16 a(2);
        for (int e = 0; e < 15; e++) {
            if (r.v_ == v_) return e;
            r = r * a;
        }
        return -1;  // unreachable
    }

    constexpr Gf16 inv() const {
        if (v_ == 0) throw std::domain_error("Gf16: inverse of zero");
        return alpha_pow(15 - log());
    }

private:
    uint8_t v_;
};

constexpr Gf16 gf16_mul(Gf16 a, Gf16 b) { return a * b; }
constexpr Gf16 gf16_inv(Gf16 a) { return a.inv(); }

}  // namespace gbt

#endif
