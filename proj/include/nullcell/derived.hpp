#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "nullcell/nullification.hpp"

namespace nullcell {

// ---------------------------------------------------------------------------
// minimal projective resolutions and Ext dimension tables
// ---------------------------------------------------------------------------

struct ProjResolution {
    std::vector<Module> terms;     // P_0 .. P_(N+1)
    std::vector<ModuleMap> maps;   // d_k : P_k -> P_(k-1), k = 1..N+1
    ModuleMap augmentation;        // P_0 ->> x
};

// Iterated projective covers of successive kernels. Minimal by
// construction; exact at every computed stage.
inline ProjResolution minimal_projective_resolution(const Module& x, std::size_t max_degree,
                                                    const SimpleList& simples) {
    ProjResolution res;
    auto cov = projective_cover(x, simples);
    res.terms.push_back(cov.module);
    res.augmentation = cov.cover;
    auto syzygy = kernel_submodule(cov.cover);
    for (std::size_t k = 1; k <= max_degree + 1; ++k) {
        auto next = projective_cover(syzygy.as_module, simples);
        Mat d = syzygy.inclusion.mat * next.cover.mat;
        res.maps.push_back(ModuleMap{next.module, res.terms.back(), std::move(d)});
        syzygy = kernel_submodule(next.cover);
        res.terms.push_back(std::move(next.module));
    }
    return res;
}

struct ExtTable {
    std::vector<std::size_t> dims;  // Ext^0 .. Ext^N
};

// Thread-safe memo for resolutions, keyed by the module's raw data. The
// verifier sweeps reuse the same x across many targets.
class ResolutionCache {
  public:
    ResolutionCache() : mu_(std::make_unique<std::mutex>()) {}

    const ProjResolution& get(const Module& x, std::size_t max_degree, const SimpleList& simples) {
        std::vector<u32> key = detail::module_sort_key(x);
        key.push_back(static_cast<u32>(max_degree));
        std::lock_guard<std::mutex> lock(*mu_);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(std::move(key), minimal_projective_resolution(x, max_degree, simples)).first;
        return it->second;
    }

  private:
    std::unique_ptr<std::mutex> mu_;
    std::map<std::vector<u32>, ProjResolution> cache_;
};

// dim Ext^n(x, y) for n = 0..N, from Hom(-, y) applied to a minimal
// resolution of x.
inline ExtTable ext_dims(const Module& x, const Module& y, std::size_t max_degree,
                         const SimpleList& simples, ResolutionCache* cache = nullptr) {
    ResolutionCache local;
    const ProjResolution& res =
        (cache ? *cache : local).get(x, max_degree, simples);

    const u32 p = x.alg->p;
    std::vector<std::vector<ModuleMap>> hom;
    for (const auto& term : res.terms) hom.push_back(hom_space(term, y));

    // delta_n : Hom(P_n, y) -> Hom(P_(n+1), y), phi -> phi o d_(n+1)
    std::vector<std::size_t> delta_rank;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        Mat stacked(y.dim * res.terms[n + 1].dim, hom[n + 1].size(), p);
        for (std::size_t j = 0; j < hom[n + 1].size(); ++j)
            stacked.set_col(j, hom[n + 1][j].mat.entries());
        Mat delta(hom[n + 1].size(), hom[n].size(), p);
        for (std::size_t j = 0; j < hom[n].size(); ++j) {
            Mat comp = hom[n][j].mat * res.maps[n].mat;
            auto c = solve(stacked, Mat::column(comp.entries(), p));
            if (!c) throw std::logic_error("ext_dims: composite escapes the Hom basis");
            delta.set_col(j, c->col(0));
        }
        delta_rank.push_back(rank_of(delta));
    }

    ExtTable out;
    std::size_t prev = 0;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        out.dims.push_back(hom[n].size() - delta_rank[n] - prev);
        prev = delta_rank[n];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hom(M, E) over End(E), Hom(P, M) over End(P)
// ---------------------------------------------------------------------------

// Shared per-theory state for the double-endomorphism verifier: End(E), E
// as a module over it (basis maps act by evaluation), and the simples of
// End(E) for building resolutions.
struct CogeneratorContext {
    EndomorphismAlgebra end_e;
    Module e_over_end;
    std::shared_ptr<const SimpleList> end_simples;
    ResolutionCache cache;

    explicit CogeneratorContext(const TorsionTheory& t, u64 seed)
        : end_e(endomorphism_algebra(t.cogenerator)) {
        e_over_end = Module{end_e.alg, t.cogenerator.dim, end_e.basis};
        validate_module(e_over_end, "E over End(E)");
        end_simples = std::make_shared<const SimpleList>(simple_modules(end_e.alg, seed));
    }
};

// Hom_R(m, E) as a left End(E)-module: a basis endomorphism f acts by
// postcomposition, phi -> f o phi.
inline Module hom_into_cogenerator(const TorsionTheory& t, const CogeneratorContext& ctx,
                                   const Module& m) {
    const u32 p = t.alg->p;
    auto hb = hom_space(m, t.cogenerator);
    const std::size_t h = hb.size();
    Mat stacked(t.cogenerator.dim * m.dim, h, p);
    for (std::size_t j = 0; j < h; ++j) stacked.set_col(j, hb[j].mat.entries());

    Module out{ctx.end_e.alg, h, {}};
    for (const auto& f : ctx.end_e.basis) {
        Mat act(h, h, p);
        for (std::size_t j = 0; j < h; ++j) {
            Mat comp = f * hb[j].mat;
            auto c = solve(stacked, Mat::column(comp.entries(), p));
            if (!c) throw std::logic_error("hom_into_cogenerator: composite escapes Hom basis");
            act.set_col(j, c->col(0));
        }
        out.action.push_back(std::move(act));
    }
    validate_module(out, "Hom(M, E) over End(E)");
    return out;
}

// Shared per-theory state for the completion verifier. Hom_R(P, -) carries
// a natural action of End(P) by precomposition; that action satisfies the
// axioms over the opposite of End(P) under our f*g = f o g convention, so
// the Ext table is computed over that algebra.
struct ProjectiveContext {
    EndomorphismAlgebra end_p;
    AlgebraPtr op_end;
    std::shared_ptr<const SimpleList> op_simples;
    ResolutionCache cache;

    explicit ProjectiveContext(const TorsionTheory& t, u64 seed)
        : end_p(endomorphism_algebra(t.projective)) {
        op_end = opposite_algebra(*end_p.alg);
        op_simples = std::make_shared<const SimpleList>(simple_modules(op_end, seed));
    }
};

inline Module hom_from_projective(const TorsionTheory& t, const ProjectiveContext& ctx,
                                  const Module& m) {
    const u32 p = t.alg->p;
    auto hb = hom_space(t.projective, m);
    const std::size_t h = hb.size();
    Mat stacked(m.dim * t.projective.dim, h, p);
    for (std::size_t j = 0; j < h; ++j) stacked.set_col(j, hb[j].mat.entries());

    Module out{ctx.op_end, h, {}};
    for (const auto& f : ctx.end_p.basis) {
        Mat act(h, h, p);
        for (std::size_t j = 0; j < h; ++j) {
            Mat comp = hb[j].mat * f;
            auto c = solve(stacked, Mat::column(comp.entries(), p));
            if (!c) throw std::logic_error("hom_from_projective: composite escapes Hom basis");
            act.set_col(j, c->col(0));
        }
        out.action.push_back(std::move(act));
    }
    validate_module(out, "Hom(P, M) over End(P)op");
    return out;
}

// ---------------------------------------------------------------------------
// the two verifiers
// ---------------------------------------------------------------------------

struct DegreeCheck {
    std::size_t degree;
    std::size_t lhs;
    std::size_t rhs;
    bool pass() const { return lhs == rhs; }
};

struct DoubleEndReport {
    std::vector<std::size_t> cell;        // dim H^n(cell M), n = 0..N
    std::vector<std::size_t> ext;         // dim Ext^n(Hom(M,E), E), n = 0..N
    std::vector<DegreeCheck> checks;      // cell[n] vs ext[n-1] for n >= 2
    DegreeCheck h0{0, 0, 0};              // dim H^0(Null M) vs dim Hom_EE(Hom(M,E), E)
    bool pass() const {
        if (!h0.pass()) return false;
        for (const auto& c : checks)
            if (!c.pass()) return false;
        return true;
    }
};

// Cross-checks the cellular cohomology table against the shifted Ext table
// over End(E); degree 0 of the same table must reproduce dim M_F.
inline DoubleEndReport verify_double_endomorphism(const TorsionTheory& t, CogeneratorContext& ctx,
                                                  const Module& m, std::size_t max_degree) {
    if (max_degree < 2) throw input_error("verify: max degree must be at least 2");
    auto null = nullify_radical_route(t, m, max_degree);
    auto x = hom_into_cogenerator(t, ctx, m);
    auto ext = ext_dims(x, ctx.e_over_end, max_degree, *ctx.end_simples, &ctx.cache);

    DoubleEndReport rep;
    rep.cell = null.cell_dims;
    rep.ext = ext.dims;
    rep.h0 = {0, null.cohomology_dims[0], ext.dims[0]};
    for (std::size_t n = 2; n <= max_degree; ++n)
        rep.checks.push_back({n, null.cell_dims[n], ext.dims[n - 1]});
    return rep;
}

inline DoubleEndReport verify_double_endomorphism(const TorsionTheory& t, const Module& m,
                                                  std::size_t max_degree, u64 seed) {
    CogeneratorContext ctx(t, seed);
    return verify_double_endomorphism(t, ctx, m, max_degree);
}

// dim H^n(Null M) recomputed as Ext over End(P): the completion formula.
inline ExtTable completion_cohomology(const TorsionTheory& t, ProjectiveContext& ctx,
                                      const Module& m, std::size_t max_degree) {
    auto x = hom_from_projective(t, ctx, regular_module(t.alg));
    auto y = hom_from_projective(t, ctx, m);
    return ext_dims(x, y, max_degree, *ctx.op_simples, &ctx.cache);
}

inline ExtTable completion_cohomology(const TorsionTheory& t, const Module& m,
                                      std::size_t max_degree, u64 seed) {
    ProjectiveContext ctx(t, seed);
    return completion_cohomology(t, ctx, m, max_degree);
}

struct CompletionReport {
    std::vector<std::size_t> completion;  // Ext over End(P)
    std::vector<std::size_t> null_dims;   // H^n of the nullification complex
    bool pass() const { return completion == null_dims; }
};

inline CompletionReport verify_completion(const TorsionTheory& t, ProjectiveContext& ctx,
                                          const Module& m, std::size_t max_degree) {
    CompletionReport rep;
    rep.completion = completion_cohomology(t, ctx, m, max_degree).dims;
    rep.null_dims = nullify_radical_route(t, m, max_degree).cohomology_dims;
    return rep;
}

inline CompletionReport verify_completion(const TorsionTheory& t, const Module& m,
                                          std::size_t max_degree, u64 seed) {
    ProjectiveContext ctx(t, seed);
    return verify_completion(t, ctx, m, max_degree);
}

}  // namespace nullcell
