#pragma once

#include <random>
#include <vector>

#include "nullcell/matrix.hpp"
#include "nullcell/subspace.hpp"

namespace nullcell {

// Dense univariate polynomials over GF(p), coefficients low-degree first,
// no trailing zeros. Only what the irreducibility/splitting machinery
// needs: arithmetic, gcd, modular powering, squarefree + DDF + EDF.
namespace poly {

using P = std::vector<u32>;

inline void trim(P& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int deg(const P& f) { return static_cast<int>(f.size()) - 1; }

inline bool is_one(const P& f) { return f.size() == 1 && f[0] == 1; }

inline P add(const P& f, const P& g, u32 p) {
    P r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u32 a = i < f.size() ? f[i] : 0, b = i < g.size() ? g[i] : 0;
        r[i] = fp_add(a, b, p);
    }
    trim(r);
    return r;
}

inline P sub(const P& f, const P& g, u32 p) {
    P r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        u32 a = i < f.size() ? f[i] : 0, b = i < g.size() ? g[i] : 0;
        r[i] = fp_sub(a, b, p);
    }
    trim(r);
    return r;
}

inline P mul(const P& f, const P& g, u32 p) {
    if (f.empty() || g.empty()) return {};
    P r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f[i]) continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] = static_cast<u32>((u64(r[i + j]) + u64(f[i]) * g[j]) % p);
    }
    trim(r);
    return r;
}

inline P monic(P f, u32 p) {
    trim(f);
    if (f.empty()) return f;
    u32 inv = fp_inv(f.back(), p);
    for (auto& c : f) c = fp_mul(c, inv, p);
    return f;
}

// f = q*g + r with deg r < deg g.
inline std::pair<P, P> divmod(P f, const P& g, u32 p) {
    if (g.empty()) throw std::logic_error("poly division by zero");
    P q;
    u32 lead_inv = fp_inv(g.back(), p);
    while (deg(f) >= deg(g)) {
        std::size_t shift = f.size() - g.size();
        u32 c = fp_mul(f.back(), lead_inv, p);
        if (q.size() < shift + 1) q.resize(shift + 1, 0);
        q[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i)
            f[shift + i] = fp_sub(f[shift + i], fp_mul(c, g[i], p), p);
        trim(f);
    }
    trim(q);
    return {q, f};
}

inline P mod(const P& f, const P& g, u32 p) { return divmod(f, g, p).second; }

inline P gcd(P f, P g, u32 p) {
    while (!g.empty()) {
        P r = mod(f, g, p);
        f = std::move(g);
        g = std::move(r);
    }
    return monic(f, p);
}

inline P derivative(const P& f, u32 p) {
    P r;
    for (std::size_t i = 1; i < f.size(); ++i) r.push_back(fp_mul(f[i], u32(i % p), p));
    trim(r);
    return r;
}

inline P pow_mod(P base, u64 e, const P& m, u32 p) {
    P r = {1 % p};
    base = mod(base, m, p);
    while (e) {
        if (e & 1) r = mod(mul(r, base, p), m, p);
        base = mod(mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

struct Factor {
    P poly;
    std::size_t multiplicity;
};

namespace detail {

// Equal-degree splitting (Cantor-Zassenhaus): h is a product of k >= 1
// distinct irreducibles, all of degree d.
inline void edf(const P& h, std::size_t d, u32 p, std::mt19937_64& rng, std::vector<P>& out) {
    if (static_cast<std::size_t>(deg(h)) == d) {
        out.push_back(monic(h, p));
        return;
    }
    std::uniform_int_distribution<u32> coeff(0, p - 1);
    for (;;) {
        P a(static_cast<std::size_t>(deg(h)), 0);
        for (auto& c : a) c = coeff(rng);
        trim(a);
        if (deg(a) < 1) continue;
        P g = gcd(a, h, p);
        if (deg(g) > 0 && deg(g) < deg(h)) {
            edf(g, d, p, rng, out);
            edf(divmod(h, g, p).first, d, p, rng, out);
            return;
        }
        P b;
        if (p == 2) {
            // trace map a + a^2 + ... + a^(2^(d-1))
            b = mod(a, h, p);
            P t = b;
            for (std::size_t i = 1; i < d; ++i) {
                t = pow_mod(t, 2, h, p);
                b = add(b, t, p);
            }
        } else {
            // norm to GF(p) then power by (p-1)/2; splits via a^((p^d-1)/2)
            P n = mod(a, h, p);
            P frob = n;
            for (std::size_t i = 1; i < d; ++i) {
                frob = pow_mod(frob, p, h, p);
                n = mod(mul(n, frob, p), h, p);
            }
            b = pow_mod(n, (p - 1) / 2, h, p);
            b = sub(b, {1 % p}, p);
        }
        P g2 = gcd(b, h, p);
        if (deg(g2) > 0 && deg(g2) < deg(h)) {
            edf(g2, d, p, rng, out);
            edf(divmod(h, g2, p).first, d, p, rng, out);
            return;
        }
    }
}

// Distinct-degree factorization of a squarefree monic f.
inline void ddf(P f, u32 p, std::mt19937_64& rng, std::vector<P>& out) {
    P x = {0, 1 % p};
    P h = x;
    std::size_t d = 0;
    while (deg(f) > 0) {
        ++d;
        if (2 * d > static_cast<std::size_t>(deg(f))) {
            out.push_back(monic(f, p));  // remaining factor is irreducible
            return;
        }
        h = pow_mod(h, p, f, p);  // h = x^(p^d) mod f
        P g = gcd(sub(h, x, p), f, p);
        if (deg(g) > 0) {
            edf(g, d, p, rng, out);
            f = divmod(f, g, p).first;
            h = mod(h, f, p);
        }
    }
}

}  // namespace detail

// Full factorization into monic irreducibles with multiplicities.
// Randomized splitting is driven by the caller's seeded engine, so results
// are deterministic per seed (and the factor SET is canonical regardless).
inline std::vector<Factor> factor(P f, u32 p, std::mt19937_64& rng) {
    std::vector<Factor> out;
    trim(f);
    if (deg(f) < 1) return out;
    f = monic(f, p);

    // peel off p-th powers: f' == 0 means f(x) = g(x^p) = g(x)^p over GF(p)
    std::size_t power = 1;
    for (;;) {
        P df = derivative(f, p);
        if (!df.empty() || deg(f) < 1) break;
        P g;
        for (std::size_t i = 0; i < f.size(); i += p) g.push_back(f[i]);
        f = std::move(g);
        power *= p;
    }

    P c = gcd(f, derivative(f, p), p);
    P w = divmod(f, c, p).first;  // squarefree part
    std::size_t i = 1;
    while (deg(w) > 0) {
        P y = gcd(w, c, p);
        P fac = divmod(w, y, p).first;  // irreducibles of exact multiplicity i
        if (deg(fac) > 0) {
            std::vector<P> irr;
            detail::ddf(fac, p, rng, irr);
            for (auto& q : irr) out.push_back({q, i * power});
        }
        w = std::move(y);
        c = divmod(c, w, p).first;
        ++i;
    }
    if (deg(c) > 0) {
        auto rest = factor(c, p, rng);  // leftover p-th powers inside c
        for (auto& r : rest) out.push_back({r.poly, r.multiplicity * power});
    }
    return out;
}

inline bool is_irreducible(const P& f, u32 p, std::mt19937_64& rng) {
    auto fs = factor(f, p, rng);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

// Evaluate f at a square matrix by Horner.
inline Mat eval(const P& f, const Mat& m) {
    const u32 p = m.modulus();
    Mat r(m.rows(), m.rows(), p);
    for (std::size_t i = f.size(); i-- > 0;) {
        r = r * m;
        for (std::size_t k = 0; k < m.rows(); ++k) r(k, k) = fp_add(r(k, k), f[i], p);
    }
    return r;
}

}  // namespace poly

// Minimal polynomial of a square matrix: first linear dependence among
// vec(I), vec(m), vec(m^2), ...
inline poly::P minimal_polynomial(const Mat& m) {
    const u32 p = m.modulus();
    const std::size_t n = m.rows();
    if (n == 0) return {1 % p};  // unit polynomial for the empty matrix
    EchelonSieve sieve(n * n, p);
    std::vector<Mat> powers;
    Mat cur = Mat::identity(n, p);
    for (;;) {
        if (!sieve.insert(cur.entries())) break;
        powers.push_back(cur);
        cur = cur * m;
    }
    // cur = m^k depends on previous powers; solve for the coefficients
    std::size_t k = powers.size();
    Mat stacked(n * n, k, p);
    for (std::size_t j = 0; j < k; ++j) stacked.set_col(j, powers[j].entries());
    auto x = solve(stacked, Mat::column(cur.entries(), p));
    if (!x) throw std::logic_error("minimal_polynomial: inconsistent dependence");
    poly::P f(k + 1, 0);
    for (std::size_t j = 0; j < k; ++j) f[j] = fp_neg(x->col(0)[j], p);
    f[k] = 1 % p;
    return f;
}

}  // namespace nullcell
