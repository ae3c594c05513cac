#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace addcyc {

namespace detail {

/*
 * Minimal unsigned big integer, little-endian 64-bit limbs. Only what is
 * needed to form (p^m - 1)/n and drive a square-and-multiply ladder.
 */
struct BigUint {
    std::vector<std::uint64_t> limbs;  // empty = 0

    static BigUint from(std::uint64_t v) {
        BigUint b;
        if (v) b.limbs.push_back(v);
        return b;
    }

    bool is_zero() const noexcept { return limbs.empty(); }

    void mul_small(std::uint64_t m) {
        unsigned __int128 carry = 0;
        for (auto& l : limbs) {
            unsigned __int128 t = static_cast<unsigned __int128>(l) * m + carry;
            l = static_cast<std::uint64_t>(t);
            carry = t >> 64;
        }
        if (carry) limbs.push_back(static_cast<std::uint64_t>(carry));
    }

    void sub_small(std::uint64_t s) {
        for (std::size_t i = 0; s && i < limbs.size(); ++i) {
            const std::uint64_t prev = limbs[i];
            limbs[i] -= s;
            s = (limbs[i] > prev) ? 1 : 0;
        }
        if (s) throw std::underflow_error("BigUint: negative result");
        while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
    }

    // divides in place, returns the remainder
    std::uint64_t div_small(std::uint64_t d) {
        unsigned __int128 rem = 0;
        for (std::size_t i = limbs.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | limbs[i];
            limbs[i] = static_cast<std::uint64_t>(cur / d);
            rem = cur % d;
        }
        while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
        return static_cast<std::uint64_t>(rem);
    }

    std::size_t bit_length() const noexcept {
        if (limbs.empty()) return 0;
        std::size_t top = 64;
        std::uint64_t h = limbs.back();
        while (top > 0 && !(h & (std::uint64_t(1) << (top - 1)))) --top;
        return (limbs.size() - 1) * 64 + top;
    }

    bool bit(std::size_t i) const noexcept {
        const std::size_t limb = i / 64;
        if (limb >= limbs.size()) return false;
        return (limbs[limb] >> (i % 64)) & 1;
    }
};

inline BigUint pow_minus_one(std::uint64_t p, std::size_t m) {
    BigUint b = BigUint::from(1);
    for (std::size_t i = 0; i < m; ++i) b.mul_small(p);
    b.sub_small(1);
    return b;
}

}  // namespace detail

/*
 * The extension field F_{p^m} = F_p[x]/<modulus>, with a monic irreducible
 * modulus of degree m. Elements are dense coefficient residues of fixed
 * length m (no discrete-log tables; everything is exact and deterministic).
 */
class ExtensionField {
   public:
    using Elem = std::vector<std::uint32_t>;  // exactly m entries

    ExtensionField(const PrimeField& base, Poly modulus)
        : base_(base), modulus_(std::move(modulus)), m_(static_cast<std::size_t>(modulus_.degree())) {
        if (modulus_.degree() < 1) throw std::invalid_argument("ExtensionField: modulus must have degree >= 1");
        if (modulus_.leading() != 1) throw std::invalid_argument("ExtensionField: modulus must be monic");
        if (!is_irreducible(base_, modulus_))
            throw std::invalid_argument("ExtensionField: modulus is not irreducible over F_p");
    }

    const PrimeField& base() const noexcept { return base_; }
    const Poly& modulus() const noexcept { return modulus_; }
    std::size_t m() const noexcept { return m_; }

    Elem zero() const { return Elem(m_, 0); }

    Elem one() const {
        Elem e(m_, 0);
        e[0] = 1 % base_.p();
        return e;
    }

    Elem from_base(std::uint32_t v) const {
        Elem e(m_, 0);
        e[0] = v % base_.p();
        return e;
    }

    // residue class of x itself (for m = 1 this reduces to -modulus[0])
    Elem gen() const { return from_poly(Poly::x()); }

    Elem from_poly(const Poly& a) const {
        Poly r = poly_mod(base_, a, modulus_);
        Elem e(m_, 0);
        for (std::size_t i = 0; i < r.c.size(); ++i) e[i] = r.c[i];
        return e;
    }

    Poly to_poly(const Elem& a) const { return Poly(std::vector<std::uint32_t>(a)); }

    bool is_zero(const Elem& a) const noexcept {
        for (auto v : a)
            if (v) return false;
        return true;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(m_);
        for (std::size_t i = 0; i < m_; ++i) r[i] = base_.add(a[i], b[i]);
        return r;
    }

    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(m_);
        for (std::size_t i = 0; i < m_; ++i) r[i] = base_.sub(a[i], b[i]);
        return r;
    }

    Elem neg(const Elem& a) const {
        Elem r(m_);
        for (std::size_t i = 0; i < m_; ++i) r[i] = base_.neg(a[i]);
        return r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
        for (std::size_t i = 0; i < m_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < m_; ++j)
                prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
        }
        // reduce by the monic modulus
        for (std::size_t i = prod.size(); i-- > m_;) {
            const std::uint32_t c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (std::size_t j = 0; j < m_; ++j)
                prod[i - m_ + j] = base_.sub(prod[i - m_ + j], base_.mul(c, modulus_.c[j]));
        }
        prod.resize(m_);
        return prod;
    }

    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw std::invalid_argument("ExtensionField: inversion of zero");
        auto res = poly_xgcd(base_, to_poly(a), modulus_);
        if (!res.g.is_one()) throw std::logic_error("ExtensionField: modulus not coprime to element");
        return from_poly(res.u);
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    Elem pow(const Elem& a, const detail::BigUint& e) const {
        Elem r = one();
        for (std::size_t i = e.bit_length(); i-- > 0;) {
            r = mul(r, r);
            if (e.bit(i)) r = mul(r, a);
        }
        return r;
    }

    // Horner evaluation of an F_p polynomial at a field element
    Elem eval_poly(const Poly& f, const Elem& at) const {
        Elem v = zero();
        for (std::size_t i = f.c.size(); i-- > 0;) {
            v = mul(v, at);
            v[0] = base_.add(v[0], f.c[i]);
        }
        return v;
    }

    // deterministic element order: index written base p, digit i = coefficient of x^i
    Elem elem_from_index(std::uint64_t idx) const {
        Elem e(m_, 0);
        for (std::size_t i = 0; i < m_ && idx; ++i) {
            e[i] = static_cast<std::uint32_t>(idx % base_.p());
            idx /= base_.p();
        }
        return e;
    }

    std::uint64_t index_of(const Elem& a) const {
        std::uint64_t idx = 0;
        for (std::size_t i = m_; i-- > 0;) idx = idx * base_.p() + a[i];
        return idx;
    }

    /*
     * Irreducibility of a monic f of degree m over F_p:
     * x^{p^m} = x (mod f) and gcd(x^{p^{m/q}} - x, f) = 1 for every prime q | m.
     */
    static bool is_irreducible(const PrimeField& F, const Poly& f) {
        const int m = f.degree();
        if (m < 1) return false;
        if (m == 1) return true;
        std::vector<std::size_t> checkpoints;  // m/q for prime q | m
        std::size_t rest = static_cast<std::size_t>(m);
        for (std::size_t q = 2; q * q <= rest; ++q) {
            if (rest % q == 0) {
                checkpoints.push_back(static_cast<std::size_t>(m) / q);
                while (rest % q == 0) rest /= q;
            }
        }
        if (rest > 1) checkpoints.push_back(static_cast<std::size_t>(m) / rest);

        Poly h = poly_mod(F, Poly::x(), f);  // x^{p^i} mod f, iterated Frobenius
        for (std::size_t i = 1; i <= static_cast<std::size_t>(m); ++i) {
            h = poly_pow_mod(F, h, F.p(), f);
            const bool checkpoint =
                std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end();
            if (checkpoint) {
                Poly diff = poly_sub(F, h, Poly::x());
                if (!poly_gcd(F, diff, f).is_one()) return false;
            }
        }
        return h == poly_mod(F, Poly::x(), f);
    }

   private:
    PrimeField base_;
    Poly modulus_;
    std::size_t m_;
};

/*
 * Least monic irreducible of degree m over F_p, scanning candidates in
 * index order on the low coefficients. The scan terminates fast in
 * practice; irreducibles are dense among monic polynomials.
 */
inline Poly find_irreducible_poly(const PrimeField& F, std::size_t m) {
    if (m == 0) throw std::invalid_argument("find_irreducible_poly: degree must be positive");
    const std::uint64_t p = F.p();
    for (std::uint64_t idx = 0;; ++idx) {
        std::vector<std::uint32_t> c(m + 1, 0);
        std::uint64_t t = idx;
        for (std::size_t i = 0; i < m && t; ++i) {
            c[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        if (t) throw std::logic_error("find_irreducible_poly: exhausted search space");
        c[m] = 1;
        Poly cand(std::move(c));
        if (ExtensionField::is_irreducible(F, cand)) return cand;
    }
}

// multiplicative order of p modulo n (requires gcd(n, p) = 1)
inline std::size_t multiplicative_order(std::uint64_t p, std::size_t n) {
    if (n == 1) return 1;
    if (std::gcd(p, static_cast<std::uint64_t>(n)) != 1)
        throw std::invalid_argument("multiplicative_order: n not coprime to p");
    std::uint64_t v = p % n;
    std::size_t ord = 1;
    while (v != 1) {
        v = v * p % n;
        ++ord;
        if (ord > n) throw std::logic_error("multiplicative_order: order exceeded n");
    }
    return ord;
}

inline std::vector<std::size_t> prime_divisors(std::size_t n) {
    std::vector<std::size_t> ps;
    for (std::size_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            ps.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

struct RootOfUnity {
    ExtensionField field;  // F_{p^m}, m = ord_n(p)
    ExtensionField::Elem alpha;
};

/*
 * Builds F_{p^m} with m = ord_n(p) and returns an element alpha of
 * multiplicative order exactly n. Candidates beta are scanned in index
 * order and raised to (p^m - 1)/n; the first power of exact order n wins,
 * which makes the result deterministic. The order check uses the prime
 * factorization of n, so group orders beyond 64 bits are no obstacle.
 */
inline RootOfUnity find_primitive_root_of_unity(std::size_t n, std::uint32_t p) {
    if (n == 0) throw std::invalid_argument("find_primitive_root_of_unity: n must be positive");
    PrimeField F(p);
    if (std::gcd(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(p)) != 1)
        throw std::invalid_argument("find_primitive_root_of_unity: n not coprime to p");
    const std::size_t m = multiplicative_order(p, n);
    ExtensionField E(F, find_irreducible_poly(F, m));
    if (n == 1) return {E, E.one()};

    detail::BigUint exp = detail::pow_minus_one(p, m);
    if (exp.div_small(n) != 0)
        throw std::logic_error("find_primitive_root_of_unity: n does not divide p^m - 1");
    const auto qs = prime_divisors(n);

    std::uint64_t elements = 1;
    for (std::size_t i = 0; i < m; ++i) {
        elements *= p;
        if (elements > (std::uint64_t(1) << 62)) {
            elements = std::uint64_t(1) << 62;
            break;
        }
    }
    for (std::uint64_t idx = 2; idx < elements; ++idx) {
        ExtensionField::Elem beta = E.elem_from_index(idx);
        ExtensionField::Elem alpha = E.pow(beta, exp);
        if (E.is_zero(alpha) || E.is_zero(E.sub(alpha, E.one()))) continue;
        bool exact = true;
        for (auto q : qs) {
            if (E.is_zero(E.sub(E.pow(alpha, static_cast<std::uint64_t>(n / q)), E.one()))) {
                exact = false;
                break;
            }
        }
        if (!exact) continue;
        if (!E.is_zero(E.sub(E.pow(alpha, static_cast<std::uint64_t>(n)), E.one())))
            throw std::logic_error("find_primitive_root_of_unity: candidate order check failed");
        return {E, alpha};
    }
    throw std::logic_error("find_primitive_root_of_unity: no element of exact order found");
}

}  // namespace addcyc
