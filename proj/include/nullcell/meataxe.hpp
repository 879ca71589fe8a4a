#pragma once

#include <optional>
#include <random>
#include <vector>

#include "nullcell/poly.hpp"
#include "nullcell/submodule.hpp"

namespace nullcell {

// Randomized split-or-certify machinery for composition factors. Random
// choices only affect how fast a proper submodule is found; every returned
// answer is certified:
//   - a split comes with the explicit stable subspace;
//   - simplicity is certified either by an algebra element whose minimal
//     polynomial is irreducible of full degree, or by the two-sided spin
//     test below (all kernel vectors spin full, one transposed-kernel
//     vector spins the dual full), or by exhausting every vector.
namespace meataxe {

inline constexpr std::size_t enumeration_bound = 4096;
inline constexpr std::size_t max_rounds = 400;

// The action matrices span the image of the algebra in End(m), so a basis
// of the image algebra is just a maximal independent subset of them.
inline std::vector<Mat> image_algebra_basis(const Module& m) {
    EchelonSieve sieve(m.dim * m.dim, m.alg->p);
    std::vector<Mat> basis;
    for (const auto& a : m.action)
        if (sieve.insert(a.entries())) basis.push_back(a);
    return basis;
}

// Enumerates c in [0,p)^n \ {0}, invoking fn(coords); fn returns true to
// stop early. Returns true if stopped.
template <typename Fn>
bool for_each_nonzero_combo(std::size_t n, u32 p, Fn&& fn) {
    std::vector<u32> c(n, 0);
    for (;;) {
        std::size_t i = 0;
        while (i < n && c[i] + 1 == p) c[i++] = 0;
        if (i == n) return false;
        ++c[i];
        if (fn(c)) return true;
    }
}

struct SplitOutcome {
    bool simple = false;
    Subspace proper;  // valid iff !simple
};

namespace detail {

inline std::optional<Subspace> proper_spin(const Module& m, const std::vector<u32>& v) {
    Subspace s = spin_one(m, v);
    if (s.dim() > 0 && s.dim() < m.dim) return s;
    return std::nullopt;
}

// Examines one singular algebra element. Either finds a proper submodule,
// certifies simplicity (only possible when the kernel is small enough to
// enumerate), or gives up on this element.
inline std::optional<SplitOutcome> examine_singular(const Module& m, const Mat& theta_f) {
    const u32 p = m.alg->p;
    Subspace ker = kernel_subspace(theta_f);

    for (std::size_t j = 0; j < ker.dim(); ++j)
        if (auto s = proper_spin(m, ker.basis().col(j))) return SplitOutcome{false, *s};

    // Kernel too large to enumerate: the basis spins above stay a heuristic.
    double combos = 1;
    for (std::size_t i = 0; i < ker.dim(); ++i) combos *= p;
    if (combos > enumeration_bound) return std::nullopt;

    std::optional<SplitOutcome> found;
    for_each_nonzero_combo(ker.dim(), p, [&](const std::vector<u32>& c) {
        auto v = ker.basis().apply(c);
        if (auto s = proper_spin(m, v)) {
            found = SplitOutcome{false, *s};
            return true;
        }
        return false;
    });
    if (found) return found;

    // Every kernel vector generates m. If additionally one transposed-kernel
    // vector generates the dual, no proper submodule can exist: a submodule
    // meeting the kernel is ruled out by the spins, and one missing it lands
    // in the image of theta_f, which the dual vector annihilates.
    Module dual = dual_module(m);
    Subspace tker = kernel_subspace(theta_f.transpose());
    if (tker.dim() == 0) throw std::logic_error("meataxe: transpose lost singularity");
    Subspace dspin = spin_one(dual, tker.basis().col(0));
    if (dspin.dim() == dual.dim) return SplitOutcome{true, {}};
    // Annihilator of the dual-generated span is a proper nonzero submodule.
    Subspace ann = kernel_subspace(dspin.basis().transpose());
    if (ann.dim() == 0 || ann.dim() == m.dim) throw std::logic_error("meataxe: bad annihilator");
    return SplitOutcome{false, ann};
}

}  // namespace detail

inline SplitOutcome split_or_certify(const Module& m, std::mt19937_64& rng) {
    if (m.dim == 0) throw std::logic_error("split_or_certify: zero module");
    if (m.dim == 1) return {true, {}};
    const u32 p = m.alg->p;
    auto basis = image_algebra_basis(m);
    std::uniform_int_distribution<u32> coeff(0, p - 1);

    double total_vectors = 1;
    for (std::size_t i = 0; i < m.dim; ++i) total_vectors *= p;

    for (std::size_t round = 0; round < max_rounds; ++round) {
        // cheap single-vector spins catch homogeneous semisimple modules
        if (round < m.dim) {
            std::vector<u32> e(m.dim, 0);
            e[round] = 1;
            if (auto s = detail::proper_spin(m, e)) return {false, *s};
        } else {
            std::vector<u32> v(m.dim);
            for (auto& x : v) x = coeff(rng);
            if (auto s = detail::proper_spin(m, v)) return {false, *s};
        }

        Mat theta(m.dim, m.dim, p);
        if (round < basis.size()) {
            theta = basis[round];  // deterministic sweep before random combos
        } else {
            for (const auto& b : basis) {
                u32 c = coeff(rng);
                if (c) theta = theta + b.scaled(c);
            }
        }
        if (theta.is_zero()) continue;

        auto mu = minimal_polynomial(theta);
        auto factors = poly::factor(mu, p, rng);
        if (factors.size() == 1 && factors[0].multiplicity == 1 &&
            factors[0].poly.size() == m.dim + 1)
            return {true, {}};  // theta alone generates a field acting irreducibly

        for (const auto& fac : factors) {
            Mat theta_f = poly::eval(fac.poly, theta);
            if (theta_f.is_zero()) continue;
            if (auto out = detail::examine_singular(m, theta_f)) return *out;
        }

        // complete fallback once the quick passes have had a chance
        if (round >= 2 && total_vectors <= enumeration_bound) {
            std::optional<Subspace> proper;
            for_each_nonzero_combo(m.dim, p, [&](const std::vector<u32>& c) {
                if (auto s = detail::proper_spin(m, c)) {
                    proper = *s;
                    return true;
                }
                return false;
            });
            if (proper) return {false, *proper};
            return {true, {}};  // every nonzero vector generates m
        }
    }
    throw std::logic_error("split_or_certify: no decision after max_rounds");
}

inline bool is_simple_certified(const Module& m, std::mt19937_64& rng) {
    return m.dim > 0 && split_or_certify(m, rng).simple;
}

// Simple modules are isomorphic iff a nonzero homomorphism exists.
inline bool simples_isomorphic(const Module& s, const Module& t) {
    return s.dim == t.dim && !hom_space(s, t).empty();
}

struct FactorList {
    std::vector<Module> reps;       // pairwise non-isomorphic simples
    std::vector<std::size_t> mult;  // multiplicities, aligned with reps
};

namespace detail {

inline void add_factor(FactorList& acc, const Module& s, bool allow_new) {
    for (std::size_t i = 0; i < acc.reps.size(); ++i)
        if (simples_isomorphic(acc.reps[i], s)) {
            ++acc.mult[i];
            return;
        }
    if (!allow_new)
        throw std::logic_error("composition_factors: factor missing from the provided simple list");
    acc.reps.push_back(s);
    acc.mult.push_back(1);
}

inline void factorize(const Module& m, std::mt19937_64& rng, FactorList& acc, bool allow_new) {
    if (m.dim == 0) return;
    auto out = split_or_certify(m, rng);
    if (out.simple) {
        add_factor(acc, m, allow_new);
        return;
    }
    auto sub = submodule_from_subspace(m, out.proper);
    auto quot = quotient_module(m, out.proper);
    factorize(sub.as_module, rng, acc, allow_new);
    factorize(quot.module, rng, acc, allow_new);
}

}  // namespace detail

// Composition factors with fresh representative discovery.
inline FactorList composition_factors_fresh(const Module& m, u64 seed) {
    std::mt19937_64 rng(seed);
    FactorList acc;
    detail::factorize(m, rng, acc, true);
    return acc;
}

// Composition factor multiplicities against a fixed list of simples.
inline std::vector<std::size_t> composition_factors_against(const Module& m,
                                                            const std::vector<Module>& simples,
                                                            u64 seed) {
    std::mt19937_64 rng(seed);
    FactorList acc;
    acc.reps = simples;
    acc.mult.assign(simples.size(), 0);
    detail::factorize(m, rng, acc, false);
    return acc.mult;
}

}  // namespace meataxe
}  // namespace nullcell
