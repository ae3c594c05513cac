#pragma once

/*
 * Test-only brute-force oracles. Everything here is deliberately naive and
 * independent of the library's optimized paths: plain counters instead of
 * Gray walks, raw row reduction instead of component bookkeeping.
 */

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "addcyc/addcyc.hpp"

namespace oracles {

using namespace addcyc;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Poly random_poly(std::mt19937_64& gen, const PrimeField& F, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<std::uint32_t> coeff_dist(0, F.p() - 1);
    std::vector<std::uint32_t> c(len_dist(gen));
    for (auto& v : c) v = coeff_dist(gen);
    return Poly(std::move(c));
}

inline QuadRingElem random_ring_elem(std::mt19937_64& gen, const QuadRing& R) {
    return {random_poly(gen, R.fp(), R.n()), random_poly(gen, R.fp(), R.n())};
}

inline AdditiveCyclicCode random_code(std::mt19937_64& gen,
                                      std::shared_ptr<const CosetStructure> cs,
                                      std::size_t max_gens = 3) {
    std::uniform_int_distribution<std::size_t> cnt_dist(0, max_gens);
    std::vector<QuadRingElem> gens;
    const std::size_t cnt = cnt_dist(gen);
    for (std::size_t i = 0; i < cnt; ++i) gens.push_back(random_ring_elem(gen, cs->ring));
    return AdditiveCyclicCode::from_generators(cs, gens);
}

// random code assembled directly from random component forms
inline AdditiveCyclicCode random_component_code(std::mt19937_64& gen,
                                                std::shared_ptr<const CosetStructure> cs) {
    std::vector<ComponentForm> comps;
    for (std::size_t i = 0; i < cs->num_cosets(); ++i) {
        const ExtensionField& K = cs->component_fields[i];
        std::uint64_t opts = 3;  // zero, plain, full
        std::uint64_t omegas = 1;
        for (std::size_t t = 0; t < cs->coset_size(i); ++t) omegas *= cs->p;
        std::uniform_int_distribution<std::uint64_t> dist(0, opts + omegas - 1);
        const std::uint64_t pick = dist(gen);
        if (pick == 0)
            comps.push_back(ComponentForm::zero());
        else if (pick == 1)
            comps.push_back(ComponentForm::plain());
        else if (pick == 2)
            comps.push_back(ComponentForm::full());
        else
            comps.push_back(ComponentForm::omega(K.to_poly(K.elem_from_index(pick - 3))));
    }
    return AdditiveCyclicCode::from_components(cs, comps);
}

/* ---------- naive polynomial arithmetic ---------- */

inline Poly naive_mul(const PrimeField& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    std::vector<std::uint32_t> r(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
    return Poly(std::move(r));
}

// schoolbook product followed by long division by x^n - 1
inline Poly naive_cyclic_mul(const PrimeField& F, const Poly& a, const Poly& b, std::size_t n) {
    return poly_mod(F, naive_mul(F, a, b), x_pow_n_minus_one(F, n));
}

/* ---------- Gram-matrix and rank oracles ---------- */

// symplectic products of all generator row pairs; zero iff self-orthogonal
inline bool gram_is_zero(const AdditiveCyclicCode& C) {
    const PrimeField& F = C.cosets().field;
    const std::size_t n = C.n();
    const FpMat& G = C.generator_matrix();
    for (std::size_t r = 0; r < G.rows; ++r)
        for (std::size_t s = 0; s < G.rows; ++s) {
            std::uint32_t acc = 0;
            for (std::size_t i = 0; i < n; ++i) {
                acc = F.add(acc, F.mul(G.at(s, i), G.at(r, n + i)));
                acc = F.sub(acc, F.mul(G.at(r, i), G.at(s, n + i)));
            }
            if (acc != 0) return false;
        }
    return true;
}

// e = dim C - dim(C ^ C_perp) computed from scratch with rank algebra only
inline std::size_t rank_oracle_e(const AdditiveCyclicCode& C) {
    const PrimeField& F = C.cosets().field;
    const std::size_t n = C.n();
    const FpMat& G = C.generator_matrix();
    FpMat constraints(G.rows, 2 * n);
    for (std::size_t r = 0; r < G.rows; ++r)
        for (std::size_t i = 0; i < n; ++i) {
            constraints.at(r, i) = F.neg(G.at(r, n + i));
            constraints.at(r, n + i) = G.at(r, i);
        }
    FpMat nullb = mat_nullspace(F, constraints);
    FpMat stacked(0, 2 * n);
    for (std::size_t r = 0; r < G.rows; ++r) stacked.append_row(G.row(r));
    for (std::size_t r = 0; r < nullb.rows; ++r) stacked.append_row(nullb.row(r));
    const std::size_t inter = C.dimension() + nullb.rows - mat_rank(F, stacked);
    return C.dimension() - inter;
}

/* ---------- exhaustive submodule enumeration (small n) ---------- */

using Signature = std::vector<std::uint32_t>;

inline Signature span_signature(const CosetStructure& cs, const std::vector<QuadRingElem>& elems) {
    FpMat m(0, 2 * cs.n);
    for (const auto& e : elems)
        for (std::size_t t = 0; t < cs.n; ++t) m.append_row(cs.ring.to_fp_vector(cs.ring.shift(e, t)));
    return row_space_signature(cs.field, m);
}

// all elements of N_i as explicit ring elements (p^{2 deg f_i} of them)
inline std::vector<QuadRingElem> component_elements(const CosetStructure& cs, std::size_t i) {
    const std::size_t m = cs.coset_size(i);
    const Poly& theta = cs.cofactors[i];
    std::vector<QuadRingElem> basis;
    for (std::size_t t = 0; t < m; ++t) {
        basis.push_back(cs.ring.shift({theta, Poly::zero()}, t));
        basis.push_back(cs.ring.shift({Poly::zero(), theta}, t));
    }
    std::vector<QuadRingElem> out;
    std::uint64_t total = 1;
    for (std::size_t t = 0; t < 2 * m; ++t) total *= cs.p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        QuadRingElem acc = cs.ring.zero();
        std::uint64_t rest = idx;
        for (std::size_t t = 0; t < 2 * m; ++t) {
            const std::uint32_t digit = static_cast<std::uint32_t>(rest % cs.p);
            rest /= cs.p;
            if (digit)
                acc = cs.ring.add(acc, cs.ring.mul_scalar(basis[t], {digit, 0}));
        }
        out.push_back(acc);
    }
    return out;
}

/*
 * Every F_p[x]-submodule of N_i, enumerated as row spaces: spans of single
 * elements, deduplicated by signature, plus their pairwise sums, iterated
 * to closure. Returns one generating set per distinct submodule.
 */
inline std::vector<std::vector<QuadRingElem>> component_submodules(const CosetStructure& cs,
                                                                   std::size_t i) {
    std::map<Signature, std::vector<QuadRingElem>> seen;
    seen.emplace(span_signature(cs, {}), std::vector<QuadRingElem>{});
    for (const auto& r : component_elements(cs, i)) {
        if (r.is_zero()) continue;
        seen.emplace(span_signature(cs, {r}), std::vector<QuadRingElem>{r});
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<Signature, std::vector<QuadRingElem>>> snapshot(seen.begin(), seen.end());
        for (std::size_t a = 0; a < snapshot.size(); ++a)
            for (std::size_t b = a + 1; b < snapshot.size(); ++b) {
                std::vector<QuadRingElem> gens = snapshot[a].second;
                gens.insert(gens.end(), snapshot[b].second.begin(), snapshot[b].second.end());
                if (seen.emplace(span_signature(cs, gens), gens).second) grew = true;
            }
    }
    std::vector<std::vector<QuadRingElem>> out;
    for (auto& [sig, gens] : seen) out.push_back(gens);
    return out;
}

// signatures of every additive cyclic code of length n (direct sums over cosets)
inline std::set<Signature> all_code_signatures(const CosetStructure& cs) {
    std::vector<std::vector<std::vector<QuadRingElem>>> per_coset;
    for (std::size_t i = 0; i < cs.num_cosets(); ++i) per_coset.push_back(component_submodules(cs, i));
    std::set<Signature> out;
    std::vector<std::size_t> pick(per_coset.size(), 0);
    while (true) {
        std::vector<QuadRingElem> gens;
        for (std::size_t i = 0; i < per_coset.size(); ++i)
            for (const auto& g : per_coset[i][pick[i]]) gens.push_back(g);
        out.insert(span_signature(cs, gens));
        std::size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == per_coset[pos].size()) pick[pos++] = 0;
        if (pos == pick.size()) break;
    }
    return out;
}

/* ---------- naive minimum weight ---------- */

// plain counter over all combinations, recomputing each codeword from scratch
inline std::optional<int> naive_min_weight(const AdditiveCyclicCode& C) {
    const PrimeField& F = C.cosets().field;
    const FpMat& G = C.generator_matrix();
    const std::size_t dim = G.rows;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= F.p();
    std::optional<int> best;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::vector<std::uint32_t> v(2 * C.n(), 0);
        std::uint64_t rest = idx;
        for (std::size_t r = 0; r < dim; ++r) {
            const std::uint32_t digit = static_cast<std::uint32_t>(rest % F.p());
            rest /= F.p();
            if (!digit) continue;
            for (std::size_t c = 0; c < v.size(); ++c) v[c] = F.add(v[c], F.mul(digit, G.at(r, c)));
        }
        int w = 0;
        for (std::size_t i = 0; i < C.n(); ++i) w += (v[i] || v[C.n() + i]) ? 1 : 0;
        if (!best || w < *best) best = w;
    }
    return best;
}

// minimum weight over big \ small by enumerate-and-filter
inline std::optional<int> naive_min_weight_outside(const AdditiveCyclicCode& big,
                                                   const AdditiveCyclicCode& small) {
    const PrimeField& F = big.cosets().field;
    const FpMat& G = big.generator_matrix();
    const std::size_t dim = G.rows;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= F.p();
    std::optional<int> best;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<std::uint32_t> v(2 * big.n(), 0);
        std::uint64_t rest = idx;
        for (std::size_t r = 0; r < dim; ++r) {
            const std::uint32_t digit = static_cast<std::uint32_t>(rest % F.p());
            rest /= F.p();
            if (!digit) continue;
            for (std::size_t c = 0; c < v.size(); ++c) v[c] = F.add(v[c], F.mul(digit, G.at(r, c)));
        }
        if (small.contains(big.cosets().ring.from_fp_vector(v))) continue;
        int w = 0;
        for (std::size_t i = 0; i < big.n(); ++i) w += (v[i] || v[big.n() + i]) ? 1 : 0;
        if (!best || w < *best) best = w;
    }
    return best;
}

}  // namespace oracles
