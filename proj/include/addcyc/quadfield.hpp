#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "extfield.hpp"
#include "poly.hpp"

namespace addcyc {

/*
 * Deterministic quadratic modulus for F_{p^2}: x^2 + x + 1 for p = 2,
 * x^2 - a with a the least quadratic non-residue for odd p.
 */
inline Poly make_quadratic_modulus(std::uint32_t p) {
    PrimeField F(p);
    if (p == 2) return Poly({1, 1, 1});
    std::vector<bool> is_square(p, false);
    for (std::uint32_t v = 0; v < p; ++v) is_square[F.mul(v, v)] = true;
    for (std::uint32_t a = 2; a < p; ++a) {
        if (!is_square[a]) return Poly({F.neg(a), 0, 1});
    }
    throw std::logic_error("make_quadratic_modulus: no non-residue found");
}

// a + b*omega with omega a fixed root of the quadratic modulus over F_p
struct QuadElement {
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    bool operator==(const QuadElement& o) const noexcept { return a == o.a && b == o.b; }
    bool is_zero() const noexcept { return a == 0 && b == 0; }
};

/*
 * F_{p^2} on the basis {1, omega}. Multiplication reduces omega^2 via
 * omega^2 = w1*omega + w0, read off the quadratic modulus.
 */
class QuadField {
   public:
    explicit QuadField(std::uint32_t p) : base_(p), modulus_(make_quadratic_modulus(p)) {
        w0_ = base_.neg(modulus_.coeff(0));
        w1_ = base_.neg(modulus_.coeff(1));
        if (!ExtensionField::is_irreducible(base_, modulus_))
            throw std::logic_error("QuadField: quadratic modulus not irreducible");
    }

    const PrimeField& base() const noexcept { return base_; }
    const Poly& modulus() const noexcept { return modulus_; }
    std::uint32_t omega_sq_const() const noexcept { return w0_; }
    std::uint32_t omega_sq_lin() const noexcept { return w1_; }

    QuadElement zero() const { return {}; }
    QuadElement one() const { return {1 % base_.p(), 0}; }
    QuadElement omega() const { return {0, 1}; }

    QuadElement add(QuadElement x, QuadElement y) const {
        return {base_.add(x.a, y.a), base_.add(x.b, y.b)};
    }
    QuadElement sub(QuadElement x, QuadElement y) const {
        return {base_.sub(x.a, y.a), base_.sub(x.b, y.b)};
    }
    QuadElement neg(QuadElement x) const { return {base_.neg(x.a), base_.neg(x.b)}; }

    QuadElement mul(QuadElement x, QuadElement y) const {
        const std::uint32_t bb = base_.mul(x.b, y.b);
        const std::uint32_t a = base_.add(base_.mul(x.a, y.a), base_.mul(w0_, bb));
        const std::uint32_t b =
            base_.add(base_.add(base_.mul(x.a, y.b), base_.mul(x.b, y.a)), base_.mul(w1_, bb));
        return {a, b};
    }

    QuadElement inv(QuadElement x) const {
        if (x.is_zero()) throw std::invalid_argument("QuadField: inversion of zero");
        // conjugate = (a + b*w1) - b*omega; norm = a^2 + a*b*w1 - b^2*w0
        const std::uint32_t norm = base_.sub(
            base_.add(base_.mul(x.a, x.a), base_.mul(base_.mul(x.a, x.b), w1_)),
            base_.mul(base_.mul(x.b, x.b), w0_));
        const std::uint32_t ninv = base_.inv(norm);
        return {base_.mul(base_.add(x.a, base_.mul(x.b, w1_)), ninv), base_.mul(base_.neg(x.b), ninv)};
    }

    QuadElement pow(QuadElement x, std::uint64_t e) const {
        QuadElement r = one();
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }

   private:
    PrimeField base_;
    Poly modulus_;
    std::uint32_t w0_, w1_;
};

/*
 * Residue u(x) = a(x) + omega*b(x) in F_{p^2}[x]/<x^n - 1>, stored as the
 * pair of F_p residues on the {1, omega} basis.
 */
struct QuadRingElem {
    Poly a, b;

    bool is_zero() const noexcept { return a.is_zero() && b.is_zero(); }
    bool operator==(const QuadRingElem& o) const noexcept { return a == o.a && b == o.b; }
    bool operator!=(const QuadRingElem& o) const noexcept { return !(*this == o); }
};

// context object for the ambient ring F_{p^2}[x]/<x^n - 1>
class QuadRing {
   public:
    QuadRing(std::uint32_t p, std::size_t n) : fq_(p), n_(n) {
        if (n == 0) throw std::invalid_argument("QuadRing: length must be positive");
    }

    const QuadField& fq() const noexcept { return fq_; }
    const PrimeField& fp() const noexcept { return fq_.base(); }
    std::size_t n() const noexcept { return n_; }

    QuadRingElem zero() const { return {}; }

    QuadRingElem make(Poly a, Poly b) const {
        return {cyclic_reduce(fp(), a, n_), cyclic_reduce(fp(), b, n_)};
    }

    QuadRingElem add(const QuadRingElem& u, const QuadRingElem& v) const {
        return {poly_add(fp(), u.a, v.a), poly_add(fp(), u.b, v.b)};
    }

    QuadRingElem sub(const QuadRingElem& u, const QuadRingElem& v) const {
        return {poly_sub(fp(), u.a, v.a), poly_sub(fp(), u.b, v.b)};
    }

    // multiplication by an F_p[x] residue acts on both basis coordinates
    QuadRingElem mul_poly(const QuadRingElem& u, const Poly& r) const {
        return {cyclic_mul(fp(), u.a, r, n_), cyclic_mul(fp(), u.b, r, n_)};
    }

    // full ring product, reducing omega^2 = w1*omega + w0
    QuadRingElem mul(const QuadRingElem& u, const QuadRingElem& v) const {
        const PrimeField& F = fp();
        Poly aa = cyclic_mul(F, u.a, v.a, n_);
        Poly ab = cyclic_mul(F, u.a, v.b, n_);
        Poly ba = cyclic_mul(F, u.b, v.a, n_);
        Poly bb = cyclic_mul(F, u.b, v.b, n_);
        Poly a = poly_add(F, aa, poly_scale(F, bb, fq_.omega_sq_const()));
        Poly b = poly_add(F, poly_add(F, ab, ba), poly_scale(F, bb, fq_.omega_sq_lin()));
        return {std::move(a), std::move(b)};
    }

    QuadRingElem mul_scalar(const QuadRingElem& u, QuadElement s) const {
        const PrimeField& F = fp();
        // (a + omega b)(s.a + omega s.b), with omega^2 reduced
        Poly a = poly_add(F, poly_scale(F, u.a, s.a),
                          poly_scale(F, u.b, F.mul(s.b, fq_.omega_sq_const())));
        Poly b = poly_add(F, poly_add(F, poly_scale(F, u.a, s.b), poly_scale(F, u.b, s.a)),
                          poly_scale(F, u.b, F.mul(s.b, fq_.omega_sq_lin())));
        return {std::move(a), std::move(b)};
    }

    QuadRingElem mul_omega(const QuadRingElem& u) const { return mul_scalar(u, fq_.omega()); }

    QuadRingElem shift(const QuadRingElem& u, std::size_t t) const {
        return {cyclic_shift(fp(), u.a, t, n_), cyclic_shift(fp(), u.b, t, n_)};
    }

    QuadRingElem apply_x_inverse(const QuadRingElem& u) const {
        return {subst_x_inverse(u.a, n_), subst_x_inverse(u.b, n_)};
    }

    // number of coordinates i with (a_i, b_i) != (0, 0)
    std::size_t weight(const QuadRingElem& u) const {
        std::size_t w = 0;
        for (std::size_t i = 0; i < n_; ++i)
            if (u.a.coeff(i) || u.b.coeff(i)) ++w;
        return w;
    }

    // flat F_p coordinates (a_0..a_{n-1} | b_0..b_{n-1})
    std::vector<std::uint32_t> to_fp_vector(const QuadRingElem& u) const {
        std::vector<std::uint32_t> v(2 * n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            v[i] = u.a.coeff(i);
            v[n_ + i] = u.b.coeff(i);
        }
        return v;
    }

    QuadRingElem from_fp_vector(const std::vector<std::uint32_t>& v) const {
        if (v.size() != 2 * n_) throw std::invalid_argument("QuadRing: vector length mismatch");
        std::vector<std::uint32_t> a(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n_));
        std::vector<std::uint32_t> b(v.begin() + static_cast<std::ptrdiff_t>(n_), v.end());
        return {Poly(std::move(a)), Poly(std::move(b))};
    }

   private:
    QuadField fq_;
    std::size_t n_;
};

}  // namespace addcyc
