#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "extfield.hpp"
#include "poly.hpp"
#include "quadfield.hpp"

namespace addcyc {

// Orbits of multiplication by p on Z/n, sorted internally and ordered by leader.
inline std::vector<std::vector<std::size_t>> coset_partition(std::size_t n, std::uint32_t p) {
    if (n == 0) throw std::invalid_argument("coset_partition: n must be positive");
    if (std::gcd(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(p)) != 1)
        throw std::invalid_argument("coset_partition: n not coprime to p");
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> cosets;
    for (std::size_t a = 0; a < n; ++a) {
        if (seen[a]) continue;
        std::vector<std::size_t> orbit;
        std::size_t v = a;
        do {
            seen[v] = true;
            orbit.push_back(v);
            v = v * p % n;
        } while (v != a);
        std::sort(orbit.begin(), orbit.end());
        cosets.push_back(std::move(orbit));
    }
    return cosets;  // leaders are the first elements and already ascend
}

/*
 * Singleton and size-two coset counts from the gcd formulas
 * (d, (d' - d)/2) with d = gcd(n, p-1), d' = gcd(n, p^2-1), cross-checked
 * against the explicit orbit partition.
 */
inline std::pair<std::size_t, std::size_t> count_small_cosets(std::size_t n, std::uint32_t p) {
    const std::uint64_t d = std::gcd(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(p) - 1);
    const std::uint64_t d2 = std::gcd(static_cast<std::uint64_t>(n),
                                      static_cast<std::uint64_t>(p) * p - 1);
    const std::size_t singletons = static_cast<std::size_t>(d);
    const std::size_t pairs = static_cast<std::size_t>((d2 - d) / 2);

    std::size_t got1 = 0, got2 = 0;
    for (const auto& z : coset_partition(n, p)) {
        if (z.size() == 1) ++got1;
        if (z.size() == 2) ++got2;
    }
    if (got1 != singletons || got2 != pairs)
        throw std::logic_error("count_small_cosets: gcd formulas disagree with orbit computation");
    return {singletons, pairs};
}

/*
 * Full cyclotomic data for F_{p^2}[x]/<x^n - 1>:
 *   - the p-cyclotomic cosets Z_i mod n (ordered by leader),
 *   - irreducible factors f_i(x) = prod_{a in Z_i} (x - alpha^a) over F_p,
 *   - cofactors theta_i = (x^n - 1)/f_i and CRT idempotents e_i,
 *   - the negation pairing j(i) with Z_j = -Z_i,
 *   - the residue fields K_i = F_p[x]/<f_i> with (theta_i mod f_i)^{-1}
 *     precomputed for component decompositions.
 *
 * Everything is verified at build time; instances are immutable and cached
 * per (n, p), so concurrent readers can share them freely.
 */
class CosetStructure {
   public:
    std::uint32_t p;
    std::size_t n;
    PrimeField field;
    QuadRing ring;  // the ambient F_{p^2}[x]/<x^n - 1>
    std::vector<std::vector<std::size_t>> cosets;
    std::vector<std::size_t> leaders;
    std::vector<std::size_t> coset_index_of;  // residue -> coset index
    std::vector<Poly> factors;                // f_i, monic irreducible
    std::vector<Poly> cofactors;              // theta_i = (x^n - 1)/f_i
    std::vector<Poly> idempotents;            // e_i
    std::vector<std::size_t> negation_pairing;
    std::vector<bool> self_paired;
    std::vector<ExtensionField> component_fields;        // K_i
    std::vector<ExtensionField::Elem> theta_mod_f;       // theta_i in K_i
    std::vector<ExtensionField::Elem> theta_inv_mod_f;   // its inverse
    std::vector<ExtensionField::Elem> x_inverse_in_f;    // x^{-1} in K_i
    ExtensionField splitting_field;
    ExtensionField::Elem root_of_unity;

    std::size_t num_cosets() const noexcept { return cosets.size(); }
    std::size_t coset_size(std::size_t i) const { return cosets[i].size(); }

    static std::shared_ptr<const CosetStructure> get(std::size_t n, std::uint32_t p) {
        static std::mutex mu;
        static std::map<std::pair<std::size_t, std::uint32_t>, std::shared_ptr<const CosetStructure>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto key = std::make_pair(n, p);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto built = std::shared_ptr<const CosetStructure>(new CosetStructure(n, p));
        cache.emplace(key, built);
        return built;
    }

   private:
    CosetStructure(std::size_t n_, std::uint32_t p_)
        : p(p_),
          n(n_),
          field(p_),
          ring(p_, n_),
          splitting_field(build_splitting_field(p_)),
          root_of_unity() {
        auto root = find_primitive_root_of_unity(n, p);
        splitting_field = root.field;
        root_of_unity = root.alpha;

        cosets = coset_partition(n, p);
        leaders.resize(cosets.size());
        coset_index_of.assign(n, 0);
        for (std::size_t i = 0; i < cosets.size(); ++i) {
            leaders[i] = cosets[i].front();
            for (auto a : cosets[i]) coset_index_of[a] = i;
        }

        negation_pairing.resize(cosets.size());
        self_paired.resize(cosets.size());
        for (std::size_t i = 0; i < cosets.size(); ++i) {
            negation_pairing[i] = coset_index_of[(n - leaders[i]) % n];
            self_paired[i] = negation_pairing[i] == i;
        }
        for (std::size_t i = 0; i < cosets.size(); ++i)
            if (negation_pairing[negation_pairing[i]] != i)
                throw std::logic_error("CosetStructure: negation pairing is not an involution");

        build_factors();
        build_idempotents();
        build_component_fields();
        verify();
    }

    static ExtensionField build_splitting_field(std::uint32_t p) {
        // placeholder; replaced in the constructor body by the root search
        PrimeField F(p);
        return ExtensionField(F, Poly::x());
    }

    void build_factors() {
        const ExtensionField& E = splitting_field;
        std::vector<ExtensionField::Elem> alpha_pow(n);
        alpha_pow[0] = E.one();
        for (std::size_t i = 1; i < n; ++i) alpha_pow[i] = E.mul(alpha_pow[i - 1], root_of_unity);

        factors.reserve(cosets.size());
        cofactors.reserve(cosets.size());
        const Poly xn1 = x_pow_n_minus_one(field, n);
        for (const auto& z : cosets) {
            // prod (x - alpha^a), coefficients carried in the splitting field
            std::vector<ExtensionField::Elem> f{E.one()};
            for (auto a : z) {
                std::vector<ExtensionField::Elem> next(f.size() + 1, E.zero());
                for (std::size_t i = 0; i < f.size(); ++i) {
                    next[i + 1] = E.add(next[i + 1], f[i]);
                    next[i] = E.sub(next[i], E.mul(f[i], alpha_pow[a]));
                }
                f = std::move(next);
            }
            std::vector<std::uint32_t> base_coeffs(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) {
                for (std::size_t j = 1; j < f[i].size(); ++j)
                    if (f[i][j] != 0)
                        throw std::logic_error("CosetStructure: factor coefficient not in base field");
                base_coeffs[i] = f[i][0];
            }
            Poly fi(std::move(base_coeffs));
            if (fi.degree() != static_cast<int>(z.size()) || fi.leading() != 1)
                throw std::logic_error("CosetStructure: malformed irreducible factor");
            auto [quot, rem] = poly_divmod(field, xn1, fi);
            if (!rem.is_zero()) throw std::logic_error("CosetStructure: factor does not divide x^n - 1");
            factors.push_back(std::move(fi));
            cofactors.push_back(std::move(quot));
        }
    }

    void build_idempotents() {
        idempotents.reserve(cosets.size());
        for (std::size_t i = 0; i < cosets.size(); ++i) {
            auto res = poly_xgcd(field, factors[i], cofactors[i]);
            if (!res.g.is_one())
                throw std::logic_error("CosetStructure: factor and cofactor are not coprime");
            idempotents.push_back(cyclic_reduce(field, poly_mul(field, res.v, cofactors[i]), n));
        }
    }

    void build_component_fields() {
        component_fields.reserve(cosets.size());
        for (std::size_t i = 0; i < cosets.size(); ++i) {
            component_fields.emplace_back(field, factors[i]);
            const ExtensionField& K = component_fields.back();
            theta_mod_f.push_back(K.from_poly(cofactors[i]));
            theta_inv_mod_f.push_back(K.inv(theta_mod_f.back()));
            x_inverse_in_f.push_back(
                K.from_poly(subst_x_inverse(cyclic_reduce(field, Poly::x(), n), n)));
        }
    }

    void verify() const {
        std::size_t total = 0;
        for (const auto& z : cosets) total += z.size();
        if (total != n) throw std::logic_error("CosetStructure: cosets do not partition Z/n");

        Poly prod = Poly::one();
        for (const auto& f : factors) prod = poly_mul(field, prod, f);
        if (prod != x_pow_n_minus_one(field, n))
            throw std::logic_error("CosetStructure: factor product differs from x^n - 1");

        Poly sum = Poly::zero();
        for (const auto& e : idempotents) sum = poly_add(field, sum, e);
        if (!sum.is_one()) throw std::logic_error("CosetStructure: idempotents do not sum to 1");
        for (std::size_t i = 0; i < idempotents.size(); ++i) {
            if (!poly_mod(field, poly_sub(field, idempotents[i], Poly::one()), factors[i]).is_zero())
                throw std::logic_error("CosetStructure: idempotent not 1 mod its factor");
            if (!poly_mod(field, idempotents[i], cofactors[i]).is_zero())
                throw std::logic_error("CosetStructure: idempotent not 0 mod the cofactor");
        }

        // self-paired cosets of size > 1 must have even size
        for (std::size_t i = 0; i < cosets.size(); ++i)
            if (self_paired[i] && cosets[i].size() > 1 && cosets[i].size() % 2 != 0)
                throw std::logic_error("CosetStructure: odd self-paired coset of size > 1");
    }
};

// e_i(x) * u(x), the N_i-component of u; the idempotent acts on each basis coordinate.
inline QuadRingElem project_component(const CosetStructure& cs, const QuadRingElem& u, std::size_t i) {
    if (i >= cs.num_cosets()) throw std::invalid_argument("project_component: coset index out of range");
    return cs.ring.mul_poly(u, cs.idempotents[i]);
}

}  // namespace addcyc
