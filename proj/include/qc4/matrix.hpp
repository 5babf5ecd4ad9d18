// Dense matrices over GF(4): row reduction, rank, inverse, nullspace.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qc4/gf4.hpp"

namespace qc4 {

class Gf4Mat {
   public:
    Gf4Mat() : rows_(0), cols_(0) {}
    Gf4Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Gf4Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Gf4& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    Gf4 at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<Gf4> row(std::size_t r) const;
    void set_row(std::size_t r, const std::vector<Gf4>& v);
    void append_row(const std::vector<Gf4>& v);

    friend bool operator==(const Gf4Mat& a, const Gf4Mat& b) = default;

    // Reduced row echelon form with leftmost-pivot order. Equal row spaces
    // yield identical results, so this doubles as a canonical form.
    struct Rref {
        Gf4Mat mat;               // rank many nonzero rows, zero rows dropped
        std::vector<int> pivots;  // pivot column per row
        std::size_t rank = 0;
    };
    Rref rref() const;

    Gf4Mat times(const Gf4Mat& other) const;
    Gf4Mat transposed() const;
    Gf4Mat conjugated() const;  // entrywise x -> x^2

    bool is_invertible() const;
    Gf4Mat inverse() const;  // throws InvalidArgumentError when singular

    // Basis of {v : M v = 0}, one row per free column, deterministic order.
    Gf4Mat nullspace() const;

    // Reduce v against the rref rows; returns the remainder. A zero remainder
    // means v lies in the row space.
    static std::vector<Gf4> reduce_against(const Rref& rr, std::vector<Gf4> v);
    static bool in_row_space(const Rref& rr, const std::vector<Gf4>& v);

    std::string to_string() const;  // rows of symbols, for diagnostics

   private:
    std::size_t rows_, cols_;
    std::vector<Gf4> a_;
};

}  // namespace qc4
