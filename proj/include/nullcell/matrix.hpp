#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "nullcell/fp.hpp"

namespace nullcell {

// Dense row-major matrix over GF(p). Entries are residues in [0, p) and
// every operation reduces mod p before returning.
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, u32 p)
        : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

    static Mat identity(std::size_t n, u32 p) {
        Mat m(n, n, p);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
        return m;
    }

    static Mat from_rows(std::size_t rows, std::size_t cols, u32 p, std::vector<u32> entries) {
        if (entries.size() != rows * cols) throw std::logic_error("Mat::from_rows: size mismatch");
        Mat m(rows, cols, p);
        for (auto& e : entries) e %= p;
        m.a_ = std::move(entries);
        return m;
    }

    static Mat column(const std::vector<u32>& v, u32 p) {
        Mat m(v.size(), 1, p);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i] % p;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    u32 modulus() const { return p_; }

    u32& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    u32 operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    const std::vector<u32>& entries() const { return a_; }

    bool is_zero() const {
        for (u32 x : a_)
            if (x) return false;
        return true;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.p_ == y.p_ && x.a_ == y.a_;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        Mat r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = fp_add(r.a_[i], y.a_[i], r.p_);
        return r;
    }

    friend Mat operator-(const Mat& x, const Mat& y) {
        Mat r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = fp_sub(r.a_[i], y.a_[i], r.p_);
        return r;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols_ != y.rows_) throw std::logic_error("Mat::mul: shape mismatch");
        Mat r(x.rows_, y.cols_, x.p_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                u64 xv = x(i, k);
                if (!xv) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    u64 acc = r(i, j) + xv * y(k, j);
                    r(i, j) = static_cast<u32>(acc % x.p_);
                }
            }
        return r;
    }

    Mat scaled(u32 c) const {
        Mat r = *this;
        for (auto& e : r.a_) e = fp_mul(e, c, p_);
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_, p_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<u32> col(std::size_t j) const {
        std::vector<u32> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_col(std::size_t j, const std::vector<u32>& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i] % p_;
    }

    std::vector<u32> apply(const std::vector<u32>& v) const {
        std::vector<u32> r(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            u64 acc = 0;
            for (std::size_t j = 0; j < cols_; ++j) acc += u64((*this)(i, j)) * (v[j] % p_);
            r[i] = static_cast<u32>(acc % p_);
        }
        return r;
    }

    // [x | y] side by side.
    static Mat hcat(const Mat& x, const Mat& y) {
        Mat r(x.rows_, x.cols_ + y.cols_, x.p_);
        for (std::size_t i = 0; i < x.rows_; ++i) {
            for (std::size_t j = 0; j < x.cols_; ++j) r(i, j) = x(i, j);
            for (std::size_t j = 0; j < y.cols_; ++j) r(i, x.cols_ + j) = y(i, j);
        }
        return r;
    }

    static Mat vcat(const Mat& x, const Mat& y) {
        Mat r(x.rows_ + y.rows_, x.cols_, x.p_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) r(i, j) = x(i, j);
        for (std::size_t i = 0; i < y.rows_; ++i)
            for (std::size_t j = 0; j < x.cols_; ++j) r(x.rows_ + i, j) = y(i, j);
        return r;
    }

    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Mat r(nr, nc, p_);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Mat& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            for (std::size_t j = 0; j < m.cols_; ++j) os << m(i, j) << (j + 1 < m.cols_ ? " " : "");
            os << '\n';
        }
        return os;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    u32 p_ = 2;
    std::vector<u32> a_;
};

struct RowReduction {
    Mat rref;
    std::vector<std::size_t> pivots;  // strictly increasing column indices
    std::size_t rank = 0;
};

// Unique reduced row-echelon form via Gauss-Jordan.
inline RowReduction row_reduce(Mat m) {
    const u32 p = m.modulus();
    RowReduction out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        u32 inv = fp_inv(m(r, c), p);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = fp_mul(m(r, j), inv, p);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            u32 f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) = fp_sub(m(i, j), fp_mul(f, m(r, j), p), p);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.rref = std::move(m);
    return out;
}

inline std::size_t rank_of(const Mat& m) { return row_reduce(m).rank; }

// Canonical nullspace basis: one column per free variable, in ascending
// free-column order, with the free coordinate set to 1.
inline Mat kernel_mat(const Mat& m) {
    auto rr = row_reduce(m);
    const u32 p = m.modulus();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : rr.pivots) is_pivot[c] = true;
    std::size_t nfree = m.cols() - rr.rank;
    Mat k(m.cols(), nfree, p);
    std::size_t idx = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        k(c, idx) = 1 % p;
        for (std::size_t i = 0; i < rr.rank; ++i)
            k(rr.pivots[i], idx) = fp_neg(rr.rref(i, c), p);
        ++idx;
    }
    return k;
}

// Solves a*x = b columnwise. Canonical particular solution: free variables
// are zero in rref coordinates. Empty optional when inconsistent.
inline std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::logic_error("solve: row count mismatch");
    auto rr = row_reduce(Mat::hcat(a, b));
    // A pivot landing in the b-block means some column of b is outside im(a).
    if (!rr.pivots.empty() && rr.pivots.back() >= a.cols()) return std::nullopt;
    Mat x(a.cols(), b.cols(), a.modulus());
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(rr.pivots[i], j) = rr.rref(i, a.cols() + j);
    return x;
}

}  // namespace nullcell
