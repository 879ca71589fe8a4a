#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nullcell/algebra.hpp"
#include "nullcell/subspace.hpp"

namespace nullcell {

// Finite-dimensional left module: one action matrix per algebra basis
// element, column-vector convention (matrices act on the left).
struct Module {
    AlgebraPtr alg;
    std::size_t dim = 0;
    std::vector<Mat> action;

    static Module zero(AlgebraPtr a) {
        Module m{a, 0, {}};
        m.action.assign(a->dim, Mat(0, 0, a->p));
        return m;
    }

    // Action of a general algebra element given by coordinates.
    Mat action_of(const std::vector<u32>& coords) const {
        Mat r(dim, dim, alg->p);
        for (std::size_t i = 0; i < alg->dim; ++i)
            if (coords[i]) r = r + action[i].scaled(coords[i]);
        return r;
    }

    friend bool operator==(const Module& x, const Module& y) {
        return *x.alg == *y.alg && x.dim == y.dim && x.action == y.action;
    }
};

// Checks the two module axioms: the unit acts as identity, and the action
// matrices realize the structure constants.
inline void validate_module(const Module& m, const std::string& what = "module") {
    const auto& a = *m.alg;
    if (m.action.size() != a.dim) throw input_error(what + ": expected one action matrix per algebra basis element");
    for (const auto& mat : m.action)
        if (mat.rows() != m.dim || mat.cols() != m.dim || mat.modulus() != a.p)
            throw input_error(what + ": action matrix has wrong shape or modulus");
    if (m.action_of(a.one) != Mat::identity(m.dim, a.p))
        throw input_error(what + ": unit does not act as identity");
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j) {
            Mat lhs = m.action[i] * m.action[j];
            Mat rhs(m.dim, m.dim, a.p);
            for (std::size_t k = 0; k < a.dim; ++k)
                if (a.c(i, j, k)) rhs = rhs + m.action[k].scaled(a.c(i, j, k));
            if (lhs != rhs)
                throw input_error(what + ": action incompatible with structure constants at pair (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
        }
}

inline Module regular_module(AlgebraPtr a) {
    Module m{a, a->dim, {}};
    for (std::size_t i = 0; i < a->dim; ++i) m.action.push_back(a->left_mult(i));
    return m;
}

inline Module direct_sum(AlgebraPtr a, const std::vector<const Module*>& parts) {
    std::size_t total = 0;
    for (auto* m : parts) total += m->dim;
    Module s{a, total, {}};
    for (std::size_t i = 0; i < a->dim; ++i) {
        Mat blockdiag(total, total, a->p);
        std::size_t off = 0;
        for (auto* m : parts) {
            for (std::size_t r = 0; r < m->dim; ++r)
                for (std::size_t c = 0; c < m->dim; ++c)
                    blockdiag(off + r, off + c) = m->action[i](r, c);
            off += m->dim;
        }
        s.action.push_back(std::move(blockdiag));
    }
    return s;
}

inline Module direct_sum(const Module& x, const Module& y) {
    return direct_sum(x.alg, {&x, &y});
}

// Module homomorphism as a (target.dim x source.dim) matrix intertwining
// the two actions.
struct ModuleMap {
    Module source;
    Module target;
    Mat mat;

    bool intertwines() const {
        for (std::size_t i = 0; i < source.alg->dim; ++i)
            if (!(mat * source.action[i] == target.action[i] * mat)) return false;
        return true;
    }

    std::size_t rank() const { return rank_of(mat); }
};

inline ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
    // f after g
    return {g.source, f.target, f.mat * g.mat};
}

inline ModuleMap identity_map(const Module& m) {
    return {m, m, Mat::identity(m.dim, m.alg->p)};
}

// Canonical basis of Hom(m, n): nullspace of the intertwining system in a
// fixed (row-major) unknown ordering, so the basis is deterministic.
inline std::vector<ModuleMap> hom_space(const Module& m, const Module& n) {
    if (!(*m.alg == *n.alg)) throw input_error("hom_space: modules over different algebras");
    const u32 p = m.alg->p;
    const std::size_t d = m.alg->dim, sm = m.dim, sn = n.dim;
    const std::size_t unknowns = sn * sm;

    Mat sys(d * unknowns, unknowns, p);
    std::size_t row = 0;
    for (std::size_t i = 0; i < d; ++i) {
        const Mat& A = m.action[i];
        const Mat& B = n.action[i];
        // (X*A - B*X)(r,s) = 0
        for (std::size_t r = 0; r < sn; ++r)
            for (std::size_t s = 0; s < sm; ++s) {
                for (std::size_t t = 0; t < sm; ++t)
                    sys(row, r * sm + t) = fp_add(sys(row, r * sm + t), A(t, s), p);
                for (std::size_t u = 0; u < sn; ++u)
                    sys(row, u * sm + s) = fp_sub(sys(row, u * sm + s), B(r, u), p);
                ++row;
            }
    }
    Mat k = kernel_mat(sys);
    std::vector<ModuleMap> basis;
    basis.reserve(k.cols());
    for (std::size_t j = 0; j < k.cols(); ++j) {
        Mat f(sn, sm, p);
        for (std::size_t r = 0; r < sn; ++r)
            for (std::size_t s = 0; s < sm; ++s) f(r, s) = k(r * sm + s, j);
        basis.push_back({m, n, std::move(f)});
    }
    return basis;
}

struct EndomorphismAlgebra {
    AlgebraPtr alg;             // composition f*g = f then-after g, i.e. f(g(x))
    std::vector<Mat> basis;     // matrices of the basis endomorphisms
    Module underlying_module;   // the module whose endomorphisms these are
};

// End(m) as an abstract algebra, with multiplication f*g = f o g.
inline EndomorphismAlgebra endomorphism_algebra(const Module& m) {
    const u32 p = m.alg->p;
    auto hb = hom_space(m, m);
    const std::size_t e = hb.size();

    Mat stacked(m.dim * m.dim, e, p);
    for (std::size_t j = 0; j < e; ++j) stacked.set_col(j, hb[j].mat.entries());

    std::vector<u32> mul(e * e * e, 0);
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j) {
            Mat comp = hb[i].mat * hb[j].mat;
            auto x = solve(stacked, Mat::column(comp.entries(), p));
            if (!x) throw std::logic_error("endomorphism_algebra: composition outside Hom basis");
            for (std::size_t k = 0; k < e; ++k) mul[(i * e + j) * e + k] = x->col(0)[k];
        }
    std::vector<u32> one(e, 0);
    if (m.dim > 0) {
        auto x = solve(stacked, Mat::column(Mat::identity(m.dim, p).entries(), p));
        if (!x) throw std::logic_error("endomorphism_algebra: identity outside Hom basis");
        one = x->col(0);
    }
    auto alg = build_algebra(p, e, std::move(mul), std::move(one));
    std::vector<Mat> basis;
    basis.reserve(e);
    for (auto& f : hb) basis.push_back(f.mat);
    return {alg, std::move(basis), m};
}

}  // namespace nullcell
