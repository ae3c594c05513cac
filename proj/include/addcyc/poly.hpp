#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fp.hpp"

namespace addcyc {

/*
 * Dense polynomial over F_p.
 *
 * Coefficients are stored in ascending degree order and kept normalized:
 * the last entry is nonzero, and the zero polynomial is the empty vector.
 * All arithmetic takes the field explicitly; polynomials do not carry it.
 */
struct Poly {
    std::vector<std::uint32_t> c;

    Poly() = default;
    explicit Poly(std::vector<std::uint32_t> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly{}; }
    static Poly one() { return Poly{std::vector<std::uint32_t>{1}}; }
    static Poly x() { return Poly{std::vector<std::uint32_t>{0, 1}}; }

    bool is_zero() const noexcept { return c.empty(); }
    bool is_one() const noexcept { return c.size() == 1 && c[0] == 1; }
    // degree of the zero polynomial is -1
    int degree() const noexcept { return static_cast<int>(c.size()) - 1; }
    std::uint32_t leading() const { return c.back(); }
    std::uint32_t coeff(std::size_t i) const noexcept { return i < c.size() ? c[i] : 0; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const Poly& o) const noexcept { return c == o.c; }
    bool operator!=(const Poly& o) const noexcept { return !(*this == o); }
};

inline Poly poly_from_coeffs(const PrimeField& F, std::vector<std::uint32_t> coeffs) {
    for (auto& v : coeffs) v %= F.p();
    return Poly(std::move(coeffs));
}

inline Poly poly_add(const PrimeField& F, const Poly& a, const Poly& b) {
    std::vector<std::uint32_t> r(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(std::move(r));
}

inline Poly poly_sub(const PrimeField& F, const Poly& a, const Poly& b) {
    std::vector<std::uint32_t> r(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(i), b.coeff(i));
    return Poly(std::move(r));
}

inline Poly poly_neg(const PrimeField& F, const Poly& a) {
    std::vector<std::uint32_t> r(a.c);
    for (auto& v : r) v = F.neg(v);
    return Poly(std::move(r));
}

inline Poly poly_scale(const PrimeField& F, const Poly& a, std::uint32_t s) {
    std::vector<std::uint32_t> r(a.c);
    for (auto& v : r) v = F.mul(v, s);
    return Poly(std::move(r));
}

inline Poly poly_mul(const PrimeField& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    std::vector<std::uint32_t> r(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
    }
    return Poly(std::move(r));
}

// Quotient and remainder; the divisor need not be monic.
inline std::pair<Poly, Poly> poly_divmod(const PrimeField& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly::zero(), a};
    std::vector<std::uint32_t> rem(a.c);
    std::vector<std::uint32_t> quot(a.c.size() - b.c.size() + 1, 0);
    const std::uint32_t lead_inv = F.inv(b.leading());
    for (int i = static_cast<int>(rem.size()) - 1; i >= b.degree(); --i) {
        if (rem[static_cast<std::size_t>(i)] == 0) continue;
        const std::uint32_t q = F.mul(rem[static_cast<std::size_t>(i)], lead_inv);
        quot[static_cast<std::size_t>(i - b.degree())] = q;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            auto& slot = rem[static_cast<std::size_t>(i) - b.c.size() + 1 + j];
            slot = F.sub(slot, F.mul(q, b.c[j]));
        }
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

inline Poly poly_mod(const PrimeField& F, const Poly& a, const Poly& b) {
    return poly_divmod(F, a, b).second;
}

inline Poly poly_div(const PrimeField& F, const Poly& a, const Poly& b) {
    return poly_divmod(F, a, b).first;
}

inline Poly poly_monic(const PrimeField& F, const Poly& a) {
    if (a.is_zero() || a.leading() == 1) return a;
    return poly_scale(F, a, F.inv(a.leading()));
}

// Monic gcd; gcd(0, 0) = 0 and gcd(u, 0) = monic(u).
inline Poly poly_gcd(const PrimeField& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

// Extended gcd: returns (g, u, v) with u*a + v*b = g and g monic (or zero).
struct XgcdResult {
    Poly g, u, v;
};

inline XgcdResult poly_xgcd(const PrimeField& F, const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::one(), u1 = Poly::zero();
    Poly v0 = Poly::zero(), v1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(F, r0, r1);
        Poly u2 = poly_sub(F, u0, poly_mul(F, q, u1));
        Poly v2 = poly_sub(F, v0, poly_mul(F, q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.is_zero() && r0.leading() != 1) {
        const std::uint32_t s = F.inv(r0.leading());
        r0 = poly_scale(F, r0, s);
        u0 = poly_scale(F, u0, s);
        v0 = poly_scale(F, v0, s);
    }
    return {std::move(r0), std::move(u0), std::move(v0)};
}

inline std::uint32_t poly_eval(const PrimeField& F, const Poly& a, std::uint32_t s) {
    std::uint32_t v = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) v = F.add(F.mul(v, s), a.c[i]);
    return v;
}

inline Poly poly_pow_mod(const PrimeField& F, Poly base, std::uint64_t e, const Poly& modulus) {
    Poly r = poly_mod(F, Poly::one(), modulus);
    base = poly_mod(F, base, modulus);
    while (e) {
        if (e & 1) r = poly_mod(F, poly_mul(F, r, base), modulus);
        base = poly_mod(F, poly_mul(F, base, base), modulus);
        e >>= 1;
    }
    return r;
}

// x^deg(a) * a(1/x)
inline Poly poly_reciprocal(const Poly& a) {
    std::vector<std::uint32_t> r(a.c.rbegin(), a.c.rend());
    return Poly(std::move(r));
}

inline Poly x_pow_n_minus_one(const PrimeField& F, std::size_t n) {
    std::vector<std::uint32_t> r(n + 1, 0);
    r[0] = F.neg(1);
    r[n] = 1;
    return Poly(std::move(r));
}

/* Residue arithmetic in F_p[x]/<x^n - 1>. */

inline Poly cyclic_reduce(const PrimeField& F, const Poly& a, std::size_t n) {
    if (a.c.size() <= n) return a;
    std::vector<std::uint32_t> r(n, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i % n] = F.add(r[i % n], a.c[i]);
    return Poly(std::move(r));
}

inline Poly cyclic_mul(const PrimeField& F, const Poly& a, const Poly& b, std::size_t n) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    std::vector<std::uint32_t> r(n, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            const std::size_t k = (i + j) % n;
            r[k] = F.add(r[k], F.mul(a.c[i], b.c[j]));
        }
    }
    return Poly(std::move(r));
}

inline Poly cyclic_shift(const PrimeField& F, const Poly& a, std::size_t t, std::size_t n) {
    if (a.is_zero()) return a;
    std::vector<std::uint32_t> r(n, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        const std::size_t k = (i + t) % n;
        r[k] = F.add(r[k], a.c[i]);
    }
    return Poly(std::move(r));
}

// u(x) -> u(x^{-1}) as a residue mod x^n - 1: coefficient at x^i moves to x^{(n-i) mod n}.
inline Poly subst_x_inverse(const Poly& a, std::size_t n) {
    if (a.degree() >= static_cast<int>(n))
        throw std::invalid_argument("subst_x_inverse: residue degree exceeds modulus length");
    std::vector<std::uint32_t> r(n, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) r[(n - i) % n] = a.c[i];
    return Poly(std::move(r));
}

inline std::string poly_to_string(const Poly& a, const char* var = "x") {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = a.c.size(); i-- > 0;) {
        if (a.c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << a.c[i];
        } else {
            if (a.c[i] != 1) os << a.c[i] << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace addcyc
