// GF(4^m) as an m-dimensional vector space over GF(4).
//
// For each supported degree m there is one canonical field: its modulus is the
// lexicographically smallest monic primitive polynomial of degree m over GF(4)
// (coefficient order constant-term first, symbol order 0 < 1 < w < W), so all
// derived matrices and serialized artifacts are reproducible across runs.
// Elements are stored in the polynomial basis {1, alpha, ..., alpha^(m-1)},
// packed two bits per coordinate.
#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qc4/gf4.hpp"
#include "qc4/matrix.hpp"

namespace qc4 {

class ExtField;

class ExtElement {
   public:
    ExtElement() : m_(0), bits_(0) {}  // detached placeholder; unusable in arithmetic

    int m() const { return m_; }
    bool is_null() const { return m_ == 0; }
    bool is_zero() const { return bits_ == 0; }
    std::uint32_t bits() const { return bits_; }

    Gf4 coeff(int j) const { return Gf4(static_cast<std::uint8_t>((bits_ >> (2 * j)) & 3u)); }
    std::vector<Gf4> coeffs() const;
    std::string symbols() const;  // coefficient of alpha^j at position j

    const ExtField& field() const;

    friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator-(const ExtElement& a, const ExtElement& b) { return a + b; }
    friend ExtElement operator*(const ExtElement& a, const ExtElement& b);
    ExtElement& operator+=(const ExtElement& b) { return *this = *this + b; }
    ExtElement& operator*=(const ExtElement& b) { return *this = *this * b; }

    friend bool operator==(const ExtElement& a, const ExtElement& b) = default;

    ExtElement inverse() const;
    ExtElement pow(std::int64_t e) const;
    ExtElement frobenius() const;  // x -> x^4
    Gf4 trace_to_base() const;     // x + x^4 + ... + x^(4^(m-1))

    bool is_in_gf4() const;
    Gf4 to_gf4() const;  // throws unless the element lies in the embedded GF(4)

    // Multiplicative order; throws on zero.
    std::uint32_t mult_order() const;

   private:
    friend class ExtField;
    ExtElement(std::uint8_t m, std::uint32_t bits) : m_(m), bits_(bits) {}

    std::uint8_t m_;
    std::uint32_t bits_;
};

class ExtField {
   public:
    static constexpr int max_degree = 6;

    // Canonical field of degree m; built once, cached for the process.
    static const ExtField& get(int m);

    int m() const { return m_; }
    std::uint32_t order() const { return order_; }                // 4^m
    const std::vector<Gf4>& modulus() const { return modulus_; }  // constant first, monic
    std::string modulus_symbols() const;

    ExtElement zero() const { return ExtElement(static_cast<std::uint8_t>(m_), 0); }
    ExtElement one() const { return from_coeff0(gf4_one); }
    ExtElement alpha() const { return alpha_; }

    ExtElement from_coeffs(std::span<const Gf4> coeffs) const;
    // Packed-coefficient bijection: index in [0, 4^m) <-> field element.
    ExtElement from_index(std::uint32_t idx) const;
    ExtElement from_power(std::uint64_t e) const;  // alpha^e
    ExtElement embed_gf4(Gf4 x) const;

    // gamma = alpha^((4^m-1)/n); throws unless n divides 4^m - 1.
    ExtElement primitive_nth_root(int n) const;

   private:
    explicit ExtField(int m);
    ExtElement from_coeff0(Gf4 c) const {
        return ExtElement(static_cast<std::uint8_t>(m_), c.value());
    }

    friend class ExtElement;
    std::uint32_t mul_bits(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t log_of(std::uint32_t bits) const;

    int m_;
    std::uint32_t order_;
    std::vector<Gf4> modulus_;
    ExtElement alpha_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = bits of alpha^i, i < order-1
    std::vector<std::uint32_t> log_;  // inverse of exp_, indexed by bits
    std::uint32_t gf4_gen_log_;       // log of the embedded image of w
};

inline const ExtField& make_extension_field(int m) { return ExtField::get(m); }

// A basis B = {beta_1, ..., beta_m} of GF(4^m) over GF(4) together with the
// change-of-coordinates matrix from the polynomial basis.
class Basis {
   public:
    Basis(int m, std::vector<ExtElement> elements, std::string description = "custom");
    static Basis polynomial(int m);

    int m() const { return m_; }
    const ExtField& field() const { return ExtField::get(m_); }
    const std::vector<ExtElement>& elements() const { return elements_; }
    const std::string& description() const { return description_; }
    bool is_polynomial_basis() const;

    // Coordinates (x_1..x_m) with x = sum x_j beta_j.
    std::vector<Gf4> expand(const ExtElement& x) const;
    ExtElement recombine(std::span<const Gf4> coords) const;

    // Row j holds the polynomial-basis coordinates of beta_j.
    const Gf4Mat& coord_rows() const { return coord_rows_; }
    // Maps polynomial-basis coordinates to B-coordinates.
    const Gf4Mat& expansion_matrix() const { return expansion_matrix_; }

   private:
    int m_;
    std::vector<ExtElement> elements_;
    std::string description_;
    Gf4Mat coord_rows_;         // m x m, row j = coords of beta_j
    Gf4Mat expansion_matrix_;   // inverse of coord_rows_ transposed appropriately
};

}  // namespace qc4
