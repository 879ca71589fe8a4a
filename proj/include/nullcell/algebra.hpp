#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nullcell/matrix.hpp"

namespace nullcell {

// Finite-dimensional associative unital algebra over GF(p), given by
// structure constants: e_i * e_j = sum_k c(i,j,k) e_k.
struct Algebra {
    u32 p = 2;
    std::size_t dim = 0;
    std::vector<u32> mul;  // c(i,j,k) at ((i*dim)+j)*dim + k
    std::vector<u32> one;  // coordinates of the unit

    u32 c(std::size_t i, std::size_t j, std::size_t k) const {
        return mul[(i * dim + j) * dim + k];
    }

    std::vector<u32> multiply(const std::vector<u32>& x, const std::vector<u32>& y) const {
        std::vector<u32> r(dim, 0);
        for (std::size_t i = 0; i < dim; ++i) {
            if (!x[i]) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (!y[j]) continue;
                u64 xy = u64(x[i]) * y[j] % p;
                for (std::size_t k = 0; k < dim; ++k)
                    r[k] = static_cast<u32>((r[k] + xy * c(i, j, k)) % p);
            }
        }
        return r;
    }

    // Matrix of left multiplication by e_i on the regular module.
    Mat left_mult(std::size_t i) const {
        Mat m(dim, dim, p);
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) m(k, j) = c(i, j, k);
        return m;
    }

    friend bool operator==(const Algebra& a, const Algebra& b) {
        return a.p == b.p && a.dim == b.dim && a.mul == b.mul && a.one == b.one;
    }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Validates and wraps raw structure constants. Associativity is checked
// exhaustively over basis triples, unit laws on both sides.
inline AlgebraPtr build_algebra(u32 p, std::size_t dim, std::vector<u32> mul,
                                std::vector<u32> one) {
    check_modulus(p);
    if (mul.size() != dim * dim * dim) throw input_error("structure constants: expected dim^3 entries");
    if (one.size() != dim) throw input_error("unit vector: expected dim entries");
    for (auto& x : mul) x %= p;
    for (auto& x : one) x %= p;

    Algebra a{p, dim, std::move(mul), std::move(one)};

    std::vector<u32> ei(dim, 0), ej(dim, 0), ek(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        ei.assign(dim, 0);
        ei[i] = 1;
        for (std::size_t j = 0; j < dim; ++j) {
            ej.assign(dim, 0);
            ej[j] = 1;
            auto ij = a.multiply(ei, ej);
            for (std::size_t k = 0; k < dim; ++k) {
                ek.assign(dim, 0);
                ek[k] = 1;
                if (a.multiply(ij, ek) != a.multiply(ei, a.multiply(ej, ek)))
                    throw input_error("associativity fails at basis triple (" + std::to_string(i) +
                                      "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        ei.assign(dim, 0);
        ei[i] = 1;
        if (a.multiply(a.one, ei) != ei)
            throw input_error("left unit law fails at basis element " + std::to_string(i));
        if (a.multiply(ei, a.one) != ei)
            throw input_error("right unit law fails at basis element " + std::to_string(i));
    }
    return std::make_shared<const Algebra>(std::move(a));
}

// Group algebra GF(p)[G] from a multiplication table with identity at
// index 0: table[g][h] = gh.
inline AlgebraPtr group_algebra(const std::vector<std::vector<std::size_t>>& table, u32 p) {
    check_modulus(p);
    const std::size_t n = table.size();
    if (n == 0) throw input_error("group table: empty");
    for (std::size_t g = 0; g < n; ++g) {
        if (table[g].size() != n) throw input_error("group table: row " + std::to_string(g) + " has wrong length");
        for (auto h : table[g])
            if (h >= n) throw input_error("group table: entry out of range in row " + std::to_string(g));
    }
    for (std::size_t g = 0; g < n; ++g) {
        if (table[0][g] != g) throw input_error("group table: index 0 is not a left identity");
        if (table[g][0] != g) throw input_error("group table: index 0 is not a right identity");
    }
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t k = 0; k < n; ++k)
                if (table[table[g][h]][k] != table[g][table[h][k]])
                    throw input_error("group table: associativity fails at (" + std::to_string(g) +
                                      "," + std::to_string(h) + "," + std::to_string(k) + ")");
    for (std::size_t g = 0; g < n; ++g) {
        bool has_inverse = false;
        for (std::size_t h = 0; h < n && !has_inverse; ++h) has_inverse = table[g][h] == 0;
        if (!has_inverse) throw input_error("group table: element " + std::to_string(g) + " has no inverse");
    }

    std::vector<u32> mul(n * n * n, 0);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) mul[(g * n + h) * n + table[g][h]] = 1 % p;
    std::vector<u32> one(n, 0);
    one[0] = 1 % p;
    return build_algebra(p, n, std::move(mul), std::move(one));
}

// Same basis, reversed multiplication.
inline AlgebraPtr opposite_algebra(const Algebra& a) {
    std::vector<u32> mul(a.mul.size());
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t k = 0; k < a.dim; ++k)
                mul[(i * a.dim + j) * a.dim + k] = a.c(j, i, k);
    return std::make_shared<const Algebra>(Algebra{a.p, a.dim, std::move(mul), a.one});
}

}  // namespace nullcell
