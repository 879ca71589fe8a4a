#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "nullcell/structure.hpp"

namespace nullcell {

// Hereditary torsion theory generated by a subset of the simples, carrying
// its injective cogenerator E (hulls of the complementary simples) and the
// matching projective P (covers of the complementary simples).
struct TorsionTheory {
    AlgebraPtr alg;
    std::shared_ptr<const SimpleList> simples;
    std::vector<std::size_t> torsion_set;     // sorted simple indices
    std::vector<std::size_t> complement_set;  // the remaining indices
    Module cogenerator;                       // E
    Module projective;                        // P

    bool in_torsion_set(std::size_t simple_index) const {
        return std::binary_search(torsion_set.begin(), torsion_set.end(), simple_index);
    }
};

inline TorsionTheory make_torsion_theory(std::shared_ptr<const SimpleList> simples,
                                         std::vector<std::size_t> torsion_set) {
    std::sort(torsion_set.begin(), torsion_set.end());
    torsion_set.erase(std::unique(torsion_set.begin(), torsion_set.end()), torsion_set.end());
    for (auto i : torsion_set)
        if (i >= simples->count())
            throw input_error("torsion set: invalid simple index " + std::to_string(i) +
                              " (valid: 0.." + std::to_string(simples->count() ? simples->count() - 1 : 0) + ")");

    TorsionTheory t;
    t.alg = simples->alg;
    t.simples = simples;
    t.torsion_set = torsion_set;
    std::vector<const Module*> hull_blocks, cover_blocks;
    for (std::size_t i = 0; i < simples->count(); ++i) {
        if (std::binary_search(torsion_set.begin(), torsion_set.end(), i)) continue;
        t.complement_set.push_back(i);
        hull_blocks.push_back(&simples->hulls[i]);
        cover_blocks.push_back(&simples->covers[i]);
    }
    t.cogenerator = direct_sum(t.alg, hull_blocks);
    t.projective = direct_sum(t.alg, cover_blocks);

    for (auto i : torsion_set) {
        if (!hom_space(simples->reps[i], t.cogenerator).empty())
            throw std::logic_error("torsion theory: cogenerator is not torsion-free");
        if (!hom_space(t.projective, simples->reps[i]).empty())
            throw std::logic_error("torsion theory: projective maps onto a torsion simple");
    }
    return t;
}

// t(M): the joint kernel of all maps into the cogenerator.
inline Submodule torsion_radical(const TorsionTheory& t, const Module& m) {
    if (!(*m.alg == *t.alg)) throw input_error("torsion_radical: module over a different algebra");
    Mat stacked(0, m.dim, t.alg->p);
    for (const auto& f : hom_space(m, t.cogenerator)) stacked = Mat::vcat(stacked, f.mat);
    return submodule_from_subspace(m, kernel_subspace(stacked));
}

inline bool is_torsion(const TorsionTheory& t, const Module& m) {
    return hom_space(m, t.cogenerator).empty();
}

inline bool is_torsion_free(const TorsionTheory& t, const Module& m) {
    return torsion_radical(t, m).dim() == 0;
}

// Independent cross-check for the radical: sum of all cyclic submodules
// whose composition factors lie in the torsion set. Exhaustive over the
// module's vectors when p^dim is small, otherwise all basis vectors plus a
// seeded sample. Diagnostic only; production paths never call this.
inline Submodule torsion_radical_oracle(const TorsionTheory& t, const Module& m, u64 seed,
                                        std::size_t exhaustive_bound = 4096) {
    const u32 p = t.alg->p;
    EchelonSieve acc(m.dim, p);
    std::map<std::vector<u32>, bool> cyclic_verdict;  // canonical basis -> all factors torsion

    auto consider = [&](const std::vector<u32>& v) {
        Subspace cyc = spin_one(m, v);
        if (cyc.dim() == 0) return;
        auto [it, fresh] = cyclic_verdict.try_emplace(cyc.basis().entries(), false);
        if (fresh) {
            auto sub = submodule_from_subspace(m, cyc);
            auto mult = meataxe::composition_factors_against(sub.as_module, t.simples->reps, seed);
            bool all_torsion = true;
            for (std::size_t i = 0; i < mult.size(); ++i)
                if (mult[i] > 0 && !t.in_torsion_set(i)) all_torsion = false;
            it->second = all_torsion;
        }
        if (it->second)
            for (std::size_t j = 0; j < cyc.dim(); ++j) acc.insert(cyc.basis().col(j));
    };

    double total = 1;
    for (std::size_t i = 0; i < m.dim && total <= exhaustive_bound; ++i) total *= p;
    if (total <= exhaustive_bound) {
        meataxe::for_each_nonzero_combo(m.dim, p, [&](const std::vector<u32>& v) {
            consider(v);
            return false;
        });
    } else {
        for (std::size_t i = 0; i < m.dim; ++i) {
            std::vector<u32> e(m.dim, 0);
            e[i] = 1;
            consider(e);
        }
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<u32> coeff(0, p - 1);
        for (std::size_t k = 0; k < exhaustive_bound / std::max<std::size_t>(m.dim, 1); ++k) {
            std::vector<u32> v(m.dim);
            for (auto& x : v) x = coeff(rng);
            consider(v);
        }
    }
    return submodule_from_subspace(m, Subspace::span(acc.basis_mat()));
}

struct QuotientsResult {
    Module mf;          // the module of quotients M_F
    ModuleMap unit;     // M -> M_F
    std::size_t kernel_dim = 0;
    std::size_t cokernel_dim = 0;
};

// M_F as the closure of M/t(M) inside its injective hull: the preimage of
// the torsion radical of hull/(M/t(M)).
inline QuotientsResult module_of_quotients(const TorsionTheory& t, const Module& m) {
    const u32 p = t.alg->p;
    auto rad = torsion_radical(t, m);
    auto f = quotient_module(m, rad.space);
    auto hull = injective_hull(f.module, *t.simples);

    Subspace im_f = image_subspace(hull.embed.mat);
    auto q = quotient_module(hull.module, im_f);
    auto tq = torsion_radical(t, q.module);

    // preimage of t(hull/F) in the hull
    EchelonSieve pre(hull.module.dim, p);
    for (std::size_t j = 0; j < im_f.dim(); ++j) pre.insert(im_f.basis().col(j));
    if (tq.dim() > 0) {
        auto lift = solve(q.projection.mat, tq.space.basis());
        if (!lift) throw std::logic_error("module_of_quotients: projection not surjective");
        for (std::size_t j = 0; j < lift->cols(); ++j) pre.insert(lift->col(j));
    }
    auto mf_sub = submodule_from_subspace(hull.module, Subspace::span(pre.basis_mat()));

    // unit: m ->> M/t(M) -> hull coordinates -> M_F coordinates
    Mat into_hull = hull.embed.mat * f.projection.mat;
    auto coords = solve(mf_sub.space.basis(), into_hull);
    if (!coords) throw std::logic_error("module_of_quotients: image escaped the closure");
    QuotientsResult out;
    out.mf = mf_sub.as_module;
    out.unit = ModuleMap{m, out.mf, std::move(*coords)};
    out.kernel_dim = rad.dim();
    out.cokernel_dim = out.mf.dim - out.unit.rank();

    if (kernel_subspace(out.unit.mat).basis() != rad.space.basis())
        throw std::logic_error("module_of_quotients: unit kernel differs from the torsion radical");
    if (!is_torsion_free(t, out.mf))
        throw std::logic_error("module_of_quotients: result is not torsion-free");
    auto coker = quotient_module(out.mf, image_subspace(out.unit.mat));
    if (!is_torsion(t, coker.module))
        throw std::logic_error("module_of_quotients: cokernel is not torsion");
    return out;
}

}  // namespace nullcell
