#pragma once

#include <cstddef>
#include <vector>

#include "nullcell/matrix.hpp"

namespace nullcell {

// Incremental echelon container. Holds reduced row-echelon vectors so that
// insertion, membership and residue computation are cheap while a span is
// grown one vector at a time (spinning, image accumulation, ...).
class EchelonSieve {
  public:
    EchelonSieve(std::size_t ambient, u32 p) : ambient_(ambient), p_(p) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    u32 modulus() const { return p_; }

    // Reduces v against the stored rows; returns the residue (zero vector
    // iff v already lies in the span).
    std::vector<u32> residue(std::vector<u32> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            u32 c = v[pivots_[i]] % p_;
            if (!c) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                v[j] = fp_sub(v[j] % p_, fp_mul(c, rows_[i][j], p_), p_);
        }
        for (auto& x : v) x %= p_;
        return v;
    }

    bool contains(const std::vector<u32>& v) const {
        for (u32 x : residue(v))
            if (x) return false;
        return true;
    }

    // Inserts v if independent of the current span. Returns true on growth.
    bool insert(const std::vector<u32>& v) {
        auto r = residue(v);
        std::size_t piv = 0;
        while (piv < ambient_ && r[piv] == 0) ++piv;
        if (piv == ambient_) return false;
        u32 inv = fp_inv(r[piv], p_);
        for (auto& x : r) x = fp_mul(x, inv, p_);
        // keep fully reduced: clear the new pivot from existing rows
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            u32 c = rows_[i][piv];
            if (!c) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                rows_[i][j] = fp_sub(rows_[i][j], fp_mul(c, r[j], p_), p_);
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(r));
        pivots_.insert(pivots_.begin() + pos, piv);
        return true;
    }

    // Basis vectors as matrix columns (echelon order).
    Mat basis_mat() const {
        Mat b(ambient_, rows_.size(), p_);
        for (std::size_t j = 0; j < rows_.size(); ++j)
            for (std::size_t i = 0; i < ambient_; ++i) b(i, j) = rows_[j][i];
        return b;
    }

  private:
    std::size_t ambient_;
    u32 p_;
    std::vector<std::vector<u32>> rows_;
    std::vector<std::size_t> pivots_;
};

// Subspace of GF(p)^n in canonical form: basis columns are the nonzero rows
// of the RREF of any spanning set, so equal subspaces compare bit-equal.
class Subspace {
  public:
    Subspace() = default;
    Subspace(std::size_t ambient, u32 p) : ambient_(ambient), p_(p), basis_(ambient, 0, p) {}

    // Span of the columns of g.
    static Subspace span(const Mat& g) {
        auto rr = row_reduce(g.transpose());
        Subspace s(g.rows(), g.modulus());
        Mat b(g.rows(), rr.rank, g.modulus());
        for (std::size_t i = 0; i < rr.rank; ++i)
            for (std::size_t j = 0; j < g.rows(); ++j) b(j, i) = rr.rref(i, j);
        s.basis_ = std::move(b);
        s.pivots_ = rr.pivots;
        return s;
    }

    static Subspace full(std::size_t ambient, u32 p) { return span(Mat::identity(ambient, p)); }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.cols(); }
    u32 modulus() const { return p_; }
    const Mat& basis() const { return basis_; }
    const std::vector<std::size_t>& pivot_rows() const { return pivots_; }

    bool is_zero() const { return dim() == 0; }

    friend bool operator==(const Subspace& x, const Subspace& y) {
        return x.ambient_ == y.ambient_ && x.p_ == y.p_ && x.basis_ == y.basis_;
    }

    bool contains_vec(const std::vector<u32>& v) const { return to_sieve().contains(v); }

    bool contains(const Subspace& other) const {
        auto sv = to_sieve();
        for (std::size_t j = 0; j < other.dim(); ++j)
            if (!sv.contains(other.basis_.col(j))) return false;
        return true;
    }

    // Coordinates of v in this basis; logic error if v is outside.
    std::vector<u32> coordinates(const std::vector<u32>& v) const {
        auto x = solve(basis_, Mat::column(v, p_));
        if (!x) throw std::logic_error("Subspace::coordinates: vector outside subspace");
        return x->col(0);
    }

    EchelonSieve to_sieve() const {
        EchelonSieve s(ambient_, p_);
        for (std::size_t j = 0; j < dim(); ++j) s.insert(basis_.col(j));
        return s;
    }

  private:
    std::size_t ambient_ = 0;
    u32 p_ = 2;
    Mat basis_;
    std::vector<std::size_t> pivots_;
};

inline Subspace sum(const Subspace& u, const Subspace& v) {
    return Subspace::span(Mat::hcat(u.basis(), v.basis()));
}

// u ∩ v from the kernel of [U | -V]: a kernel vector (x, y) has U·x = V·y.
inline Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient() || u.modulus() != v.modulus())
        throw std::logic_error("intersect: ambient mismatch");
    const u32 p = u.modulus();
    Mat stacked = Mat::hcat(u.basis(), v.basis().scaled(fp_neg(1 % p, p)));
    Mat k = kernel_mat(stacked);
    Mat pts(u.ambient(), k.cols(), p);
    for (std::size_t j = 0; j < k.cols(); ++j) {
        std::vector<u32> x(u.dim());
        for (std::size_t i = 0; i < u.dim(); ++i) x[i] = k(i, j);
        pts.set_col(j, u.basis().apply(x));
    }
    return Subspace::span(pts);
}

// Kernel of m as a canonical subspace of the domain.
inline Subspace kernel_subspace(const Mat& m) { return Subspace::span(kernel_mat(m)); }

inline Subspace image_subspace(const Mat& m) { return Subspace::span(m); }

struct QuotientCoords {
    Mat proj;     // (ambient - dim w) x ambient, kernel exactly w
    Mat section;  // ambient x (ambient - dim w), proj * section = id
};

// Coordinates on GF(p)^ambient / w. The canonical basis pivot rows of w are
// eliminated; the complementary coordinate rows parametrize the quotient.
inline QuotientCoords quotient_coords(std::size_t ambient, const Subspace& w) {
    if (w.ambient() != ambient) throw std::logic_error("quotient_coords: ambient mismatch");
    const u32 p = w.modulus();
    const auto& piv = w.pivot_rows();
    std::vector<bool> is_piv(ambient, false);
    for (auto r : piv) is_piv[r] = true;

    std::size_t q = ambient - w.dim();
    Mat reducer = Mat::identity(ambient, p);  // v -> v - W * v[pivot rows]
    for (std::size_t j = 0; j < w.dim(); ++j)
        for (std::size_t i = 0; i < ambient; ++i)
            reducer(i, piv[j]) = fp_sub(reducer(i, piv[j]), w.basis()(i, j), p);

    Mat select(q, ambient, p), embed(ambient, q, p);
    std::size_t r = 0;
    for (std::size_t i = 0; i < ambient; ++i) {
        if (is_piv[i]) continue;
        select(r, i) = 1 % p;
        embed(i, r) = 1 % p;
        ++r;
    }
    return {select * reducer, embed};
}

}  // namespace nullcell
