#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nullcell {

// Raised for anything caused by bad user data (files, tables, CLI flags).
// Internal impossibilities throw std::logic_error instead.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Moduli are capped so that a dot product of length up to ~10^6 fits in
// an unsigned 64-bit accumulator without intermediate reduction.
inline constexpr u32 max_modulus = 1u << 20;

constexpr bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void check_modulus(u32 p) {
    if (!is_prime(p)) throw input_error("modulus " + std::to_string(p) + " is not prime");
    if (p > max_modulus) throw input_error("modulus " + std::to_string(p) + " exceeds supported bound");
}

constexpr u32 fp_add(u32 a, u32 b, u32 p) {
    u32 s = a + b;
    return s >= p ? s - p : s;
}

constexpr u32 fp_neg(u32 a, u32 p) { return a == 0 ? 0 : p - a; }

constexpr u32 fp_sub(u32 a, u32 b, u32 p) { return fp_add(a, fp_neg(b, p), p); }

constexpr u32 fp_mul(u32 a, u32 b, u32 p) { return static_cast<u32>(u64(a) * b % p); }

constexpr u32 fp_pow(u32 a, u64 e, u32 p) {
    u32 r = 1 % p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

// Fermat inverse; p prime, a != 0.
constexpr u32 fp_inv(u32 a, u32 p) { return fp_pow(a, p - 2, p); }

// Scalar wrapper for places where carrying the modulus alongside the
// residue reads better than raw (value, p) pairs.
struct Fp {
    u32 v = 0;
    u32 p = 2;

    friend Fp operator+(Fp a, Fp b) { return {fp_add(a.v, b.v, a.p), a.p}; }
    friend Fp operator-(Fp a, Fp b) { return {fp_sub(a.v, b.v, a.p), a.p}; }
    friend Fp operator*(Fp a, Fp b) { return {fp_mul(a.v, b.v, a.p), a.p}; }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v && a.p == b.p; }
    Fp inv() const { return {fp_inv(v, p), p}; }
    Fp operator-() const { return {fp_neg(v, p), p}; }
};

}  // namespace nullcell
