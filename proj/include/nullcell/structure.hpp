#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "nullcell/meataxe.hpp"

namespace nullcell {

// ---------------------------------------------------------------------------
// socle / radical / top
// ---------------------------------------------------------------------------

// Largest semisimple submodule: sum of the images of all maps out of the
// simples.
inline Submodule socle(const Module& m, const std::vector<Module>& simples) {
    EchelonSieve sieve(m.dim, m.alg->p);
    for (const auto& s : simples)
        for (const auto& f : hom_space(s, m))
            for (std::size_t j = 0; j < s.dim; ++j) sieve.insert(f.mat.col(j));
    return submodule_from_subspace(m, Subspace::span(sieve.basis_mat()));
}

// Smallest submodule with semisimple quotient: intersection of the kernels
// of all maps into the simples.
inline Submodule radical(const Module& m, const std::vector<Module>& simples) {
    Mat stacked(0, m.dim, m.alg->p);
    for (const auto& s : simples)
        for (const auto& f : hom_space(m, s)) stacked = Mat::vcat(stacked, f.mat);
    return submodule_from_subspace(m, kernel_subspace(stacked));
}

inline Quotient top_module(const Module& m, const std::vector<Module>& simples) {
    return quotient_module(m, radical(m, simples).space);
}

// ---------------------------------------------------------------------------
// constrained intertwiner solving
// ---------------------------------------------------------------------------

// Finds one module map Phi: source -> target satisfying optional linear
// side conditions L*Phi = R (maps out of target) and Phi*U = T (prescribed
// values on given source vectors). Canonical solution of the stacked
// system, so deterministic. Empty optional when inconsistent.
inline std::optional<ModuleMap> solve_intertwiner(const Module& source, const Module& target,
                                                  const Mat* L, const Mat* R, const Mat* U,
                                                  const Mat* T) {
    const u32 p = source.alg->p;
    const std::size_t sm = source.dim, sn = target.dim, d = source.alg->dim;
    const std::size_t unknowns = sn * sm;

    std::size_t rows = d * unknowns;
    if (L) rows += L->rows() * sm;
    if (U) rows += sn * U->cols();
    Mat sys(rows, unknowns, p);
    Mat rhs(rows, 1, p);

    std::size_t row = 0;
    for (std::size_t i = 0; i < d; ++i) {
        const Mat& A = source.action[i];
        const Mat& B = target.action[i];
        for (std::size_t r = 0; r < sn; ++r)
            for (std::size_t s = 0; s < sm; ++s) {
                for (std::size_t t = 0; t < sm; ++t)
                    sys(row, r * sm + t) = fp_add(sys(row, r * sm + t), A(t, s), p);
                for (std::size_t u = 0; u < sn; ++u)
                    sys(row, u * sm + s) = fp_sub(sys(row, u * sm + s), B(r, u), p);
                ++row;
            }
    }
    if (L) {
        // (L*Phi)(r,s) = R(r,s)
        for (std::size_t r = 0; r < L->rows(); ++r)
            for (std::size_t s = 0; s < sm; ++s) {
                for (std::size_t u = 0; u < sn; ++u) sys(row, u * sm + s) = (*L)(r, u);
                rhs(row, 0) = (*R)(r, s);
                ++row;
            }
    }
    if (U) {
        // (Phi*U)(r,c) = T(r,c)
        for (std::size_t c = 0; c < U->cols(); ++c)
            for (std::size_t r = 0; r < sn; ++r) {
                for (std::size_t s = 0; s < sm; ++s) sys(row, r * sm + s) = (*U)(s, c);
                rhs(row, 0) = (*T)(r, c);
                ++row;
            }
    }
    auto x = solve(sys, rhs);
    if (!x) return std::nullopt;
    Mat phi(sn, sm, p);
    for (std::size_t r = 0; r < sn; ++r)
        for (std::size_t s = 0; s < sm; ++s) phi(r, s) = x->operator()(r * sm + s, 0);
    return ModuleMap{source, target, std::move(phi)};
}

// ---------------------------------------------------------------------------
// indecomposable injective hulls by maximal complements
// ---------------------------------------------------------------------------

namespace detail {

inline EchelonSieve spin_sieve(const Module& m, EchelonSieve sieve, const std::vector<u32>& extra) {
    std::vector<std::vector<u32>> work;
    if (sieve.insert(extra)) work.push_back(extra);
    while (!work.empty()) {
        auto v = std::move(work.back());
        work.pop_back();
        for (const auto& a : m.action) {
            auto w = a.apply(v);
            if (sieve.insert(w)) work.push_back(std::move(w));
        }
    }
    return sieve;
}

inline bool disjoint_from(const EchelonSieve& x, const Subspace& w) {
    EchelonSieve probe = x;
    for (std::size_t j = 0; j < w.dim(); ++j)
        if (!probe.insert(w.basis().col(j))) return false;
    return true;
}

// Hull of the simple s inside the injective cogenerator c: grow a submodule
// containing the image of s while staying disjoint from a fixed semisimple
// complement w of that image in soc c. A maximal such submodule is both an
// essential extension of s and a direct summand of c.
inline std::pair<Module, ModuleMap> hull_in_cogenerator(const Module& c, const Module& s,
                                                        const std::vector<Module>& simples) {
    const u32 p = c.alg->p;
    auto into = hom_space(s, c);
    if (into.empty()) throw std::logic_error("hull_in_cogenerator: simple does not embed in the cogenerator");
    const Mat& phi = into.front().mat;

    // socle of c decomposed so that im(phi) is one of the summands
    EchelonSieve soc_sieve(c.dim, p);
    for (std::size_t j = 0; j < s.dim; ++j)
        if (!soc_sieve.insert(phi.col(j))) throw std::logic_error("hull_in_cogenerator: embedding not injective");
    Mat wcols(c.dim, 0, p);
    for (const auto& t : simples)
        for (const auto& f : hom_space(t, c)) {
            bool fresh = false;
            for (std::size_t j = 0; j < t.dim; ++j)
                if (!soc_sieve.contains(f.mat.col(j))) fresh = true;
            if (!fresh) continue;
            for (std::size_t j = 0; j < t.dim; ++j)
                if (!soc_sieve.insert(f.mat.col(j)))
                    throw std::logic_error("hull_in_cogenerator: simple image overlaps socle partially");
            wcols = Mat::hcat(wcols, f.mat);
        }
    Subspace w = Subspace::span(wcols);

    EchelonSieve x(c.dim, p);
    for (std::size_t j = 0; j < s.dim; ++j) x = spin_sieve(c, std::move(x), phi.col(j));
    if (!disjoint_from(x, w)) throw std::logic_error("hull_in_cogenerator: seed meets the complement");

    // quick greedy pass over ambient coordinates
    for (std::size_t i = 0; i < c.dim; ++i) {
        std::vector<u32> e(c.dim, 0);
        e[i] = 1;
        if (x.contains(e)) continue;
        EchelonSieve y = spin_sieve(c, x, e);
        if (disjoint_from(y, w)) x = std::move(y);
    }

    // completion: keep adjoining preimages of simple submodules of c/X while
    // that preserves disjointness from w; when nothing extends, X is maximal
    // and therefore injective
    for (;;) {
        Subspace xs = Subspace::span(x.basis_mat());
        if (xs.dim() == static_cast<std::size_t>(c.dim)) break;
        auto q = quotient_module(c, xs);
        bool extended = false;
        std::set<std::vector<u32>> seen;
        for (const auto& t : simples) {
            auto hb = hom_space(t, q.module);
            if (hb.empty()) continue;
            double combos = 1;
            for (std::size_t i = 0; i < hb.size() && combos <= meataxe::enumeration_bound; ++i)
                combos *= p;
            if (combos > meataxe::enumeration_bound)
                throw std::logic_error("hull_in_cogenerator: socle too rich to enumerate");
            meataxe::for_each_nonzero_combo(hb.size(), p, [&](const std::vector<u32>& lam) {
                Mat psi(q.module.dim, t.dim, p);
                for (std::size_t i = 0; i < hb.size(); ++i)
                    if (lam[i]) psi = psi + hb[i].mat.scaled(lam[i]);
                if (psi.is_zero()) return false;
                Subspace im = image_subspace(psi);
                if (!seen.insert(im.basis().entries()).second) return false;
                auto lift = solve(q.projection.mat, im.basis());
                if (!lift) throw std::logic_error("hull_in_cogenerator: projection not surjective");
                EchelonSieve y = x;
                for (std::size_t j = 0; j < lift->cols(); ++j) y.insert(lift->col(j));
                if (!disjoint_from(y, w)) return false;
                x = std::move(y);
                extended = true;
                return true;
            });
            if (extended) break;
        }
        if (!extended) break;
    }

    auto hull = submodule_from_subspace(c, Subspace::span(x.basis_mat()));
    auto emb = solve(hull.space.basis(), phi);
    if (!emb) throw std::logic_error("hull_in_cogenerator: embedding escaped the hull");
    return {hull.as_module, ModuleMap{s, hull.as_module, std::move(*emb)}};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// the simples of an algebra, with hulls and covers
// ---------------------------------------------------------------------------

struct SimpleList {
    AlgebraPtr alg;
    u64 seed = 0;
    std::vector<Module> reps;            // canonical order: (dim, action entries)
    std::vector<std::size_t> end_dims;   // dim End(S)
    std::vector<Module> hulls;           // E(S)
    std::vector<ModuleMap> hull_embeds;  // S -> E(S)
    std::vector<Module> covers;          // P(S)
    std::vector<ModuleMap> cover_maps;   // P(S) -> S

    std::size_t count() const { return reps.size(); }
};

namespace detail {

inline std::vector<u32> module_sort_key(const Module& m) {
    std::vector<u32> key;
    key.push_back(static_cast<u32>(m.dim));
    for (const auto& a : m.action) key.insert(key.end(), a.entries().begin(), a.entries().end());
    return key;
}

}  // namespace detail

// Every simple occurs in the regular module, so its composition factors
// exhaust the isomorphism classes.
inline std::vector<Module> find_simples(AlgebraPtr alg, u64 seed) {
    auto factors = meataxe::composition_factors_fresh(regular_module(alg), seed);
    std::sort(factors.reps.begin(), factors.reps.end(), [](const Module& a, const Module& b) {
        return detail::module_sort_key(a) < detail::module_sort_key(b);
    });
    return factors.reps;
}

inline SimpleList simple_modules(AlgebraPtr alg, u64 seed) {
    SimpleList list;
    list.alg = alg;
    list.seed = seed;
    list.reps = find_simples(alg, seed);
    for (const auto& s : list.reps) list.end_dims.push_back(hom_space(s, s).size());

    // injective cogenerator: dual of the regular module of the opposite algebra
    auto op = opposite_algebra(*alg);
    Module cogen = with_algebra(dual_module(regular_module(op), opposite_algebra(*op)), alg);

    for (const auto& s : list.reps) {
        auto [hull, emb] = detail::hull_in_cogenerator(cogen, s, list.reps);
        list.hulls.push_back(hull);
        list.hull_embeds.push_back(emb);
    }

    // covers by duality: P(S) is the dual of the hull of the dual simple
    // over the opposite algebra
    std::vector<Module> op_reps;
    for (const auto& s : list.reps) op_reps.push_back(dual_module(s, op));
    Module op_cogen = dual_module(regular_module(alg), op);
    for (std::size_t i = 0; i < list.reps.size(); ++i) {
        auto [op_hull, op_emb] = detail::hull_in_cogenerator(op_cogen, op_reps[i], op_reps);
        Module cover = with_algebra(dual_module(op_hull, opposite_algebra(*op)), alg);
        // dual of (DS -> E(DS)) is P(S) -> DDS = S, bit-exactly the stored rep
        ModuleMap cmap{cover, list.reps[i], op_emb.mat.transpose()};
        list.covers.push_back(std::move(cover));
        list.cover_maps.push_back(std::move(cmap));
    }
    return list;
}

// ---------------------------------------------------------------------------
// injective hulls and projective covers of arbitrary modules
// ---------------------------------------------------------------------------

struct Hull {
    Module module;
    ModuleMap embed;
};

inline Hull injective_hull(const Module& m, const SimpleList& simples) {
    const u32 p = m.alg->p;
    if (m.dim == 0) {
        Module z = Module::zero(m.alg);
        return {z, ModuleMap{m, z, Mat(0, 0, p)}};
    }

    // decompose soc m into simple summands, one chosen embedding per copy
    EchelonSieve soc_sieve(m.dim, p);
    std::vector<std::pair<std::size_t, Mat>> chosen;  // (simple index, embedding matrix)
    for (std::size_t si = 0; si < simples.count(); ++si) {
        const auto& s = simples.reps[si];
        auto hb = hom_space(s, m);
        std::size_t copies = 0;
        for (const auto& f : hb) {
            bool fresh = false;
            for (std::size_t j = 0; j < s.dim; ++j)
                if (!soc_sieve.contains(f.mat.col(j))) fresh = true;
            if (!fresh) continue;
            for (std::size_t j = 0; j < s.dim; ++j)
                if (!soc_sieve.insert(f.mat.col(j)))
                    throw std::logic_error("injective_hull: simple image overlaps socle partially");
            chosen.emplace_back(si, f.mat);
            ++copies;
        }
        if (copies * simples.end_dims[si] != hb.size())
            throw std::logic_error("injective_hull: socle multiplicity mismatch");
    }

    std::vector<const Module*> blocks;
    for (const auto& [si, f] : chosen) blocks.push_back(&simples.hulls[si]);
    Module e = direct_sum(m.alg, blocks);

    // prescribe the extension on the socle: each chosen copy of S goes to
    // the canonical copy inside its block of E(S)
    std::size_t soc_dim = soc_sieve.dim();
    Mat u(m.dim, soc_dim, p), t(e.dim, soc_dim, p);
    std::size_t col = 0, offset = 0;
    for (const auto& [si, f] : chosen) {
        const Mat& emb = simples.hull_embeds[si].mat;
        for (std::size_t j = 0; j < simples.reps[si].dim; ++j, ++col) {
            u.set_col(col, f.col(j));
            auto target = emb.col(j);
            for (std::size_t r = 0; r < simples.hulls[si].dim; ++r) t(offset + r, col) = target[r];
        }
        offset += simples.hulls[si].dim;
    }

    auto phi = solve_intertwiner(m, e, nullptr, nullptr, &u, &t);
    if (!phi) throw std::logic_error("injective_hull: extension system inconsistent");
    if (phi->rank() != m.dim) throw std::logic_error("injective_hull: extension not injective");
    if (socle(e, simples.reps).dim() != soc_dim)
        throw std::logic_error("injective_hull: socle grew, extension not essential");
    return {std::move(e), std::move(*phi)};
}

struct Cover {
    Module module;
    ModuleMap cover;
};

inline Cover projective_cover(const Module& m, const SimpleList& simples) {
    const u32 p = m.alg->p;
    if (m.dim == 0) {
        Module z = Module::zero(m.alg);
        return {z, ModuleMap{z, m, Mat(0, 0, p)}};
    }

    // decompose top m: keep a map onto a simple whenever it cuts the joint
    // kernel down, until the joint kernel is the radical
    Subspace joint = Subspace::full(m.dim, p);
    std::vector<std::pair<std::size_t, Mat>> chosen;  // (simple index, map onto it)
    for (std::size_t si = 0; si < simples.count(); ++si) {
        for (const auto& f : hom_space(m, simples.reps[si])) {
            Subspace cut = intersect(joint, kernel_subspace(f.mat));
            if (cut.dim() < joint.dim()) {
                chosen.emplace_back(si, f.mat);
                joint = cut;
            }
        }
    }
    if (!(joint == radical(m, simples.reps).space))
        throw std::logic_error("projective_cover: joint kernel is not the radical");

    std::vector<const Module*> blocks;
    std::size_t top_dim = 0;
    for (const auto& [si, f] : chosen) {
        blocks.push_back(&simples.covers[si]);
        top_dim += simples.reps[si].dim;
    }
    Module cover_mod = direct_sum(m.alg, blocks);

    // lift blockdiag(P(S) -> S) through the stacked surjection m -> top m
    Mat tau(0, m.dim, p);
    Mat sigma(top_dim, cover_mod.dim, p);
    std::size_t row = 0, offc = 0;
    for (const auto& [si, f] : chosen) {
        tau = Mat::vcat(tau, f);
        const Mat& cm = simples.cover_maps[si].mat;
        for (std::size_t r = 0; r < cm.rows(); ++r)
            for (std::size_t c = 0; c < cm.cols(); ++c) sigma(row + r, offc + c) = cm(r, c);
        row += simples.reps[si].dim;
        offc += simples.covers[si].dim;
    }

    auto phi = solve_intertwiner(cover_mod, m, &tau, &sigma, nullptr, nullptr);
    if (!phi) throw std::logic_error("projective_cover: lift system inconsistent");
    if (phi->rank() != m.dim) throw std::logic_error("projective_cover: lift not surjective");
    return {std::move(cover_mod), std::move(*phi)};
}

}  // namespace nullcell
