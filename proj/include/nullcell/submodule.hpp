#pragma once

#include <vector>

#include "nullcell/module.hpp"

namespace nullcell {

// Closure of a vector set under the algebra action (spinning).
inline Subspace spin(const Module& m, const std::vector<std::vector<u32>>& vectors) {
    EchelonSieve sieve(m.dim, m.alg->p);
    std::vector<std::vector<u32>> work;
    for (const auto& v : vectors)
        if (sieve.insert(v)) work.push_back(v);
    while (!work.empty()) {
        auto v = std::move(work.back());
        work.pop_back();
        for (const auto& a : m.action) {
            auto w = a.apply(v);
            if (sieve.insert(w)) work.push_back(std::move(w));
        }
    }
    return Subspace::span(sieve.basis_mat());
}

inline Subspace spin_one(const Module& m, const std::vector<u32>& v) { return spin(m, {v}); }

inline bool is_stable(const Module& m, const Subspace& s) {
    auto sieve = s.to_sieve();
    for (std::size_t j = 0; j < s.dim(); ++j)
        for (const auto& a : m.action)
            if (!sieve.contains(a.apply(s.basis().col(j)))) return false;
    return true;
}

// An action-stable subspace together with its own module structure and the
// inclusion map into the parent.
struct Submodule {
    Module parent;
    Subspace space;
    Module as_module;
    ModuleMap inclusion;

    std::size_t dim() const { return space.dim(); }
};

inline Submodule submodule_from_subspace(const Module& m, const Subspace& s) {
    Module sub{m.alg, s.dim(), {}};
    for (const auto& a : m.action) {
        auto x = solve(s.basis(), a * s.basis());
        if (!x) throw std::logic_error("submodule_from_subspace: subspace not action-stable");
        sub.action.push_back(std::move(*x));
    }
    ModuleMap incl{sub, m, s.basis()};
    return {m, s, std::move(sub), std::move(incl)};
}

// Smallest submodule containing the given vectors.
inline Submodule submodule_generated(const Module& m, const std::vector<std::vector<u32>>& vectors) {
    return submodule_from_subspace(m, spin(m, vectors));
}

struct Quotient {
    Module module;
    ModuleMap projection;  // parent -> quotient, kernel exactly the submodule
    Mat section;           // right inverse of the projection matrix
};

inline Quotient quotient_module(const Module& m, const Subspace& w) {
    if (!is_stable(m, w)) throw input_error("quotient_module: subspace is not a submodule");
    auto qc = quotient_coords(m.dim, w);
    Module q{m.alg, m.dim - w.dim(), {}};
    for (const auto& a : m.action) q.action.push_back(qc.proj * a * qc.section);
    ModuleMap proj{m, q, qc.proj};
    return {std::move(q), std::move(proj), qc.section};
}

inline Quotient quotient_module(const Module& m, const Submodule& w) {
    if (!(w.parent == m)) throw input_error("quotient_module: submodule of a different parent");
    return quotient_module(m, w.space);
}

// Kernel and image of a map are themselves submodules.
inline Submodule kernel_submodule(const ModuleMap& f) {
    return submodule_from_subspace(f.source, kernel_subspace(f.mat));
}

inline Submodule image_submodule(const ModuleMap& f) {
    return submodule_from_subspace(f.target, image_subspace(f.mat));
}

// Rebind a module to a structurally equal algebra instance (used after
// double dualization, which reproduces the structure constants bit-exactly
// but under a fresh pointer).
inline Module with_algebra(Module m, AlgebraPtr a) {
    if (!(*m.alg == *a)) throw std::logic_error("with_algebra: algebras differ structurally");
    m.alg = std::move(a);
    return m;
}

// Vector-space dual with transposed actions: a left module over the
// opposite algebra. Double dual reproduces the original matrices exactly.
inline Module dual_module(const Module& m, AlgebraPtr op_alg) {
    Module d{op_alg, m.dim, {}};
    for (const auto& a : m.action) d.action.push_back(a.transpose());
    return d;
}

inline Module dual_module(const Module& m) { return dual_module(m, opposite_algebra(*m.alg)); }

// Contravariant action on maps: dual(f) : dual(target) -> dual(source).
inline ModuleMap dual_map(const ModuleMap& f, AlgebraPtr op_alg) {
    return {dual_module(f.target, op_alg), dual_module(f.source, op_alg), f.mat.transpose()};
}

}  // namespace nullcell
