#include "qc4/matrix.hpp"

#include <algorithm>

#include "qc4/errors.hpp"

namespace qc4 {

Gf4Mat Gf4Mat::identity(std::size_t n) {
    Gf4Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = gf4_one;
    return m;
}

std::vector<Gf4> Gf4Mat::row(std::size_t r) const {
    return std::vector<Gf4>(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                            a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Gf4Mat::set_row(std::size_t r, const std::vector<Gf4>& v) {
    if (v.size() != cols_) throw InvalidArgumentError("Gf4Mat: row length mismatch");
    std::copy(v.begin(), v.end(), a_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

void Gf4Mat::append_row(const std::vector<Gf4>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw InvalidArgumentError("Gf4Mat: row length mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
}

Gf4Mat::Rref Gf4Mat::rref() const {
    Gf4Mat work(*this);
    std::vector<int> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t sel = r;
        while (sel < rows_ && work.at(sel, c).is_zero()) ++sel;
        if (sel == rows_) continue;
        if (sel != r) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(work.at(sel, j), work.at(r, j));
        }
        const Gf4 scale = work.at(r, c).inverse();
        for (std::size_t j = c; j < cols_; ++j) work.at(r, j) *= scale;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || work.at(i, c).is_zero()) continue;
            const Gf4 f = work.at(i, c);
            for (std::size_t j = c; j < cols_; ++j) work.at(i, j) += f * work.at(r, j);
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    Rref out;
    out.rank = r;
    out.pivots = std::move(pivots);
    out.mat = Gf4Mat(r, cols_);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.mat.at(i, j) = work.at(i, j);
    return out;
}

Gf4Mat Gf4Mat::times(const Gf4Mat& other) const {
    if (cols_ != other.rows_) throw InvalidArgumentError("Gf4Mat: dimension mismatch in product");
    Gf4Mat out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Gf4 aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, j) += aik * other.at(k, j);
        }
    return out;
}

Gf4Mat Gf4Mat::transposed() const {
    Gf4Mat out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Gf4Mat Gf4Mat::conjugated() const {
    Gf4Mat out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).conj();
    return out;
}

bool Gf4Mat::is_invertible() const {
    return rows_ == cols_ && rref().rank == rows_;
}

Gf4Mat Gf4Mat::inverse() const {
    if (rows_ != cols_) throw InvalidArgumentError("Gf4Mat: inverse of non-square matrix");
    // Gauss-Jordan on [A | I].
    Gf4Mat aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = gf4_one;
    }
    const Rref rr = aug.rref();
    if (rr.rank != rows_ || rr.pivots.back() >= static_cast<int>(cols_))
        throw InvalidArgumentError("Gf4Mat: matrix is singular");
    Gf4Mat out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = rr.mat.at(i, cols_ + j);
    return out;
}

Gf4Mat Gf4Mat::nullspace() const {
    const Rref rr = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : rr.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    Gf4Mat out(0, cols_);
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Gf4> v(cols_);
        v[free_col] = gf4_one;
        for (std::size_t i = 0; i < rr.rank; ++i) {
            // pivot variable = -(coefficient of the free column) = same in char 2
            v[static_cast<std::size_t>(rr.pivots[i])] = rr.mat.at(i, free_col);
        }
        out.append_row(v);
    }
    return out;
}

std::vector<Gf4> Gf4Mat::reduce_against(const Rref& rr, std::vector<Gf4> v) {
    if (v.size() != rr.mat.cols() && rr.rank > 0)
        throw InvalidArgumentError("Gf4Mat: vector length mismatch in reduction");
    for (std::size_t i = 0; i < rr.rank; ++i) {
        const auto pc = static_cast<std::size_t>(rr.pivots[i]);
        const Gf4 f = v[pc];
        if (f.is_zero()) continue;
        for (std::size_t j = pc; j < v.size(); ++j) v[j] += f * rr.mat.at(i, j);
    }
    return v;
}

bool Gf4Mat::in_row_space(const Rref& rr, const std::vector<Gf4>& v) {
    const auto rem = reduce_against(rr, v);
    return std::all_of(rem.begin(), rem.end(), [](Gf4 x) { return x.is_zero(); });
}

std::string Gf4Mat::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) s += at(i, j).symbol();
        s += '\n';
    }
    return s;
}

}  // namespace qc4
