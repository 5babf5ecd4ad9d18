// GF(4) = {0, 1, w, W} with w = omega, W = omega^2 = omega + 1.
// Elements are encoded in two bits (0, 1, 2, 3); addition is XOR of the
// encodings and the nonzero elements form a cyclic group of order 3.
#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "qc4/errors.hpp"

namespace qc4 {

class Gf4 {
   public:
    constexpr Gf4() : v_(0) {}
    constexpr explicit Gf4(std::uint8_t v) : v_(v & 3u) {}

    constexpr std::uint8_t value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr Gf4 operator+(Gf4 a, Gf4 b) { return Gf4(static_cast<std::uint8_t>(a.v_ ^ b.v_)); }
    friend constexpr Gf4 operator-(Gf4 a, Gf4 b) { return a + b; }  // characteristic 2
    friend constexpr Gf4 operator*(Gf4 a, Gf4 b) { return Gf4(mul_table[a.v_][b.v_]); }
    Gf4& operator+=(Gf4 b) { v_ ^= b.v_; return *this; }
    Gf4& operator*=(Gf4 b) { v_ = mul_table[v_][b.v_]; return *this; }

    friend constexpr bool operator==(Gf4 a, Gf4 b) = default;
    friend constexpr auto operator<=>(Gf4 a, Gf4 b) = default;  // symbol order 0 < 1 < w < W

    Gf4 inverse() const {
        if (v_ == 0) throw InvalidArgumentError("GF(4): inverse of zero");
        return Gf4(inv_table[v_]);
    }

    // The hermitian conjugate x -> x^2; fixes {0,1} and swaps w <-> W.
    constexpr Gf4 conj() const { return *this * *this; }

    char symbol() const { return "01wW"[v_]; }

    static Gf4 from_symbol(char c) {
        switch (c) {
            case '0': return Gf4(0);
            case '1': return Gf4(1);
            case 'w': return Gf4(2);
            case 'W': return Gf4(3);
            default: throw InvalidArgumentError(std::string("GF(4): bad symbol '") + c + "'");
        }
    }

   private:
    static constexpr std::uint8_t mul_table[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},
        {0, 3, 1, 2},
    };
    static constexpr std::uint8_t inv_table[4] = {0, 1, 3, 2};

    std::uint8_t v_;
};

inline constexpr Gf4 gf4_zero{0};
inline constexpr Gf4 gf4_one{1};
inline constexpr Gf4 gf4_w{2};
inline constexpr Gf4 gf4_W{3};

inline constexpr std::array<Gf4, 4> gf4_elements{gf4_zero, gf4_one, gf4_w, gf4_W};

inline Gf4 conjugate_gf4(Gf4 x) { return x.conj(); }

}  // namespace qc4
