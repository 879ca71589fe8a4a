#pragma once

#include <string>
#include <vector>

#include "nullcell/algebra.hpp"

namespace nullcell {
namespace fixtures {

// Symmetric group on three letters, identity first; table[g][h] = g∘h with
// composition applying h first.
inline std::vector<std::vector<std::size_t>> s3_table() {
    return {
        {0, 1, 2, 3, 4, 5},
        {1, 0, 5, 4, 3, 2},
        {2, 4, 0, 5, 1, 3},
        {3, 5, 4, 0, 2, 1},
        {4, 2, 3, 1, 5, 0},
        {5, 3, 1, 2, 0, 4},
    };
}

inline std::vector<std::vector<std::size_t>> z2_table() { return {{0, 1}, {1, 0}}; }

// Upper-triangular 2x2 matrices over GF(2); basis order (e11, e22, e12).
inline AlgebraPtr upper_triangular_2x2_gf2() {
    const std::size_t d = 3;
    std::vector<u32> mul(d * d * d, 0);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) { mul[(i * d + j) * d + k] = 1; };
    set(0, 0, 0);  // e11 e11 = e11
    set(1, 1, 1);  // e22 e22 = e22
    set(0, 2, 2);  // e11 e12 = e12
    set(2, 1, 2);  // e12 e22 = e12
    return build_algebra(2, d, std::move(mul), {1, 1, 0});
}

inline AlgebraPtr group_algebra_s3_gf3() { return group_algebra(s3_table(), 3); }

inline AlgebraPtr group_algebra_z2_gf2() { return group_algebra(z2_table(), 2); }

// GF(3) x GF(3): two orthogonal idempotents.
inline AlgebraPtr split_pair_gf3() {
    std::vector<u32> mul(8, 0);
    mul[(0 * 2 + 0) * 2 + 0] = 1;
    mul[(1 * 2 + 1) * 2 + 1] = 1;
    return build_algebra(3, 2, std::move(mul), {1, 1});
}

inline AlgebraPtr by_name(const std::string& name) {
    if (name == "f3s3") return group_algebra_s3_gf3();
    if (name == "ut2_f2") return upper_triangular_2x2_gf2();
    if (name == "f2z2") return group_algebra_z2_gf2();
    if (name == "f3xf3") return split_pair_gf3();
    throw input_error("unknown fixture algebra '" + name +
                      "' (known: f3s3, ut2_f2, f2z2, f3xf3)");
}

}  // namespace fixtures
}  // namespace nullcell
