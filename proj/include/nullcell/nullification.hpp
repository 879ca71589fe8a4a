#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nullcell/torsion.hpp"

namespace nullcell {

enum class NullRoute {
    Radical,    // each term is the hull of (stage / torsion radical)
    Quotients,  // each term is the hull of the stage's module of quotients
};

// Cochain complex of torsion-free injectives computed up to max_degree,
// with one extra term so cohomology at max_degree is exact.
struct NullComplex {
    std::vector<Module> terms;     // I^0 .. I^(N+1)
    std::vector<ModuleMap> diffs;  // d^n : I^n -> I^(n+1), n = 0..N
    ModuleMap unit;                // M -> I^0
    std::size_t max_degree = 0;
};

struct NullStage {
    Module module;      // M^n (radical route) or Q^n (quotients route)
    std::size_t dim_m = 0;
    std::size_t dim_t = 0;  // dim t(M^n), resp. dim t(Q^n)
    std::size_t dim_f = 0;  // dim F^n, resp. dim N^n
    std::size_t dim_i = 0;  // dim I^n, resp. dim J^n
};

struct NullResult {
    NullRoute route = NullRoute::Radical;
    NullComplex complex;
    std::vector<NullStage> stages;          // degrees 0..N
    std::vector<std::size_t> cell_dims;     // radical route only: dim t(M^n)
    std::vector<std::size_t> cohomology_dims;  // degrees 0..N
};

namespace detail {

inline void check_complex(const NullComplex& c, const TorsionTheory& t) {
    for (std::size_t n = 0; n + 1 < c.diffs.size(); ++n)
        if (!(c.diffs[n + 1].mat * c.diffs[n].mat).is_zero())
            throw std::logic_error("nullification: d∘d != 0");
    for (const auto& term : c.terms)
        if (torsion_radical(t, term).dim() != 0)
            throw std::logic_error("nullification: term is not torsion-free");
}

inline std::vector<std::size_t> cohomology_dims_of(const NullComplex& c) {
    std::vector<std::size_t> dims;
    std::size_t prev_rank = 0;
    for (std::size_t n = 0; n <= c.max_degree; ++n) {
        std::size_t ker = c.terms[n].dim - c.diffs[n].rank();
        dims.push_back(ker - prev_rank);
        prev_rank = c.diffs[n].rank();
    }
    return dims;
}

}  // namespace detail

// Iterates: F^n = M^n / t(M^n), I^n = hull(F^n), M^(n+1) = I^n / F^n, with
// differential I^n ->> M^(n+1) ->> F^(n+1) -> I^(n+1). Stops producing work
// once a stage hits zero; zero terms keep the bookkeeping uniform.
inline NullResult nullify_radical_route(const TorsionTheory& t, const Module& m,
                                        std::size_t max_degree) {
    NullResult out;
    out.route = NullRoute::Radical;
    out.complex.max_degree = max_degree;

    Module cur = m;
    Mat proj_to_cur(m.dim, m.dim, t.alg->p);  // unused at n = 0
    for (std::size_t n = 0; n <= max_degree + 1; ++n) {
        auto rad = torsion_radical(t, cur);
        auto f = quotient_module(cur, rad.space);
        auto hull = injective_hull(f.module, *t.simples);

        Mat to_term = hull.embed.mat * f.projection.mat;  // cur -> I^n
        if (n == 0)
            out.complex.unit = ModuleMap{m, hull.module, to_term};
        else
            out.complex.diffs.push_back(
                ModuleMap{out.complex.terms.back(), hull.module, to_term * proj_to_cur});

        if (n <= max_degree)
            out.stages.push_back({cur, cur.dim, rad.dim(), f.module.dim, hull.module.dim});

        // next stage: M^(n+1) = I^n / F^n
        auto next = quotient_module(hull.module, image_subspace(hull.embed.mat));
        proj_to_cur = next.projection.mat;
        out.complex.terms.push_back(std::move(hull.module));
        cur = std::move(next.module);
    }

    detail::check_complex(out.complex, t);
    for (const auto& st : out.stages) out.cell_dims.push_back(st.dim_t);
    out.cohomology_dims = detail::cohomology_dims_of(out.complex);
    return out;
}

// Iterates with the module of quotients: N^n = (Q^n)_F, J^n = hull(N^n),
// Q^(n+1) = J^n / im(d^(n-1)).
inline NullResult nullify_quotients_route(const TorsionTheory& t, const Module& m,
                                          std::size_t max_degree) {
    NullResult out;
    out.route = NullRoute::Quotients;
    out.complex.max_degree = max_degree;

    auto qr = module_of_quotients(t, m);
    auto hull = injective_hull(qr.mf, *t.simples);
    out.complex.unit = ModuleMap{m, hull.module, hull.embed.mat * qr.unit.mat};
    out.stages.push_back({m, m.dim, qr.kernel_dim, qr.mf.dim, hull.module.dim});
    Subspace prev_image = image_subspace(out.complex.unit.mat);
    out.complex.terms.push_back(hull.module);

    for (std::size_t n = 0; n <= max_degree; ++n) {
        auto q = quotient_module(out.complex.terms.back(), prev_image);
        auto qr_next = module_of_quotients(t, q.module);
        auto hull_next = injective_hull(qr_next.mf, *t.simples);

        Mat d = hull_next.embed.mat * qr_next.unit.mat * q.projection.mat;
        out.complex.diffs.push_back(
            ModuleMap{out.complex.terms.back(), hull_next.module, d});
        prev_image = image_subspace(d);
        if (n + 1 <= max_degree)
            out.stages.push_back(
                {q.module, q.module.dim, qr_next.kernel_dim, qr_next.mf.dim, hull_next.module.dim});
        out.complex.terms.push_back(std::move(hull_next.module));
    }

    detail::check_complex(out.complex, t);
    out.cohomology_dims = detail::cohomology_dims_of(out.complex);
    if (out.cohomology_dims[0] != out.stages[0].dim_f)
        throw std::logic_error("nullification: degree-0 cohomology differs from the module of quotients");
    return out;
}

inline NullResult nullification(const TorsionTheory& t, const Module& m, std::size_t max_degree,
                                NullRoute route) {
    return route == NullRoute::Radical ? nullify_radical_route(t, m, max_degree)
                                       : nullify_quotients_route(t, m, max_degree);
}

// dim H^n of the cellular approximation, read off the stage data.
inline std::vector<std::size_t> cell_cohomology(const TorsionTheory& t, const Module& m,
                                                std::size_t max_degree) {
    return nullify_radical_route(t, m, max_degree).cell_dims;
}

// H^n = ker d^n / im d^(n-1) as explicit subquotient modules.
inline std::vector<std::pair<std::size_t, Module>> complex_cohomology(const NullComplex& c) {
    std::vector<std::pair<std::size_t, Module>> out;
    for (std::size_t n = 0; n <= c.max_degree; ++n) {
        auto ker = kernel_submodule(c.diffs[n]);
        Subspace image = n == 0 ? Subspace(c.terms[0].dim, c.terms[0].alg->p)
                                : image_subspace(c.diffs[n - 1].mat);
        auto inside = solve(ker.space.basis(), image.basis());
        if (!inside) throw std::logic_error("complex_cohomology: image not inside kernel");
        auto h = quotient_module(ker.as_module, Subspace::span(*inside));
        out.emplace_back(h.module.dim, std::move(h.module));
    }
    return out;
}

// Heuristic signature periodicity: smallest (preperiod a, period l) such
// that (dim M^n, dim t, dim I^n, composition factor counts) agree between
// degrees n and n+l for all a <= n <= N-l. Signatures do not certify module
// isomorphisms, so this is advisory.
inline std::optional<std::pair<std::size_t, std::size_t>> detect_periodicity(
    const TorsionTheory& t, const NullResult& r, u64 seed) {
    const std::size_t n_max = r.stages.size();
    if (n_max == 0) return std::nullopt;
    std::vector<std::vector<std::size_t>> sig;
    for (const auto& st : r.stages) {
        std::vector<std::size_t> s{st.dim_m, st.dim_t, st.dim_i};
        auto mult = meataxe::composition_factors_against(st.module, t.simples->reps, seed);
        s.insert(s.end(), mult.begin(), mult.end());
        sig.push_back(std::move(s));
    }
    for (std::size_t a = 0; a + 1 < n_max; ++a)
        for (std::size_t l = 1; a + l < n_max; ++l) {
            bool ok = true;
            for (std::size_t n = a; n + l < n_max && ok; ++n) ok = sig[n] == sig[n + l];
            if (ok) return std::make_pair(a, l);
        }
    return std::nullopt;
}

}  // namespace nullcell
