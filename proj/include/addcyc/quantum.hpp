#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "distance.hpp"

namespace addcyc {

/*
 * Parameters of an [[n, k, d]]_p quantum stabilizer code. d_lower is the
 * best proven lower bound; d_exact is set only when the distance was
 * established by exhaustive enumeration. Externally claimed distances are
 * kept apart in d_claimed and never merged into the proven fields.
 */
struct QuantumParams {
    std::uint32_t p = 2;
    std::size_t n = 0;
    std::size_t k = 0;
    int d_lower = 1;
    std::optional<int> d_exact;
    std::optional<bool> pure;
    std::size_t r = 0;  // padding rows of the nearly-self-orthogonal construction
    std::string construction;
    std::optional<int> d_claimed;

    int best_d() const noexcept { return d_exact ? *d_exact : d_lower; }

    std::string to_string() const {
        std::ostringstream os;
        os << "[[" << n << "," << k << ",";
        if (d_exact)
            os << *d_exact;
        else
            os << ">=" << d_lower;
        os << "]]_" << p;
        return os.str();
    }
};

/*
 * Stabilizer construction: a symplectic self-orthogonal (n, p^{n-k}) code
 * yields an [[n, k, d]]_p code with d = min wt(C^{perp_s} \ C) for k > 0
 * and d = min wt(C \ 0) for k = 0. The code is pure when d equals
 * d(C^{perp_s}).
 */
inline QuantumParams stabilizer_params(const AdditiveCyclicCode& C, const EnumOptions& opts = {}) {
    OrthogonalityReport rep = classify_orthogonality(C);
    if (!rep.is_self_orthogonal)
        throw std::invalid_argument("stabilizer_params: code is not symplectic self-orthogonal");
    QuantumParams q;
    q.p = C.p();
    q.n = C.n();
    q.k = C.n() - C.dimension();
    q.construction = "stabilizer";

    AdditiveCyclicCode D = dual(C);
    std::optional<int> min_wt_C;
    try {
        DistanceResult own = min_weight_exhaustive(C, opts);
        min_wt_C = own.value;  // nullopt for the zero code
    } catch (const std::invalid_argument&) {
        // dim(C) beyond the enumeration budget; purity stays undetermined
    }

    if (q.k == 0) {
        // C = C^{perp_s}; distance is the minimum weight of C itself
        if (min_wt_C) {
            q.d_exact = *min_wt_C;
            q.d_lower = *min_wt_C;
            q.pure = true;
        } else {
            auto bound = cyclic_lower_bound(C, opts);
            q.d_lower = bound.bound.value_or(1);
        }
        return q;
    }

    try {
        DistanceResult outside = min_weight_outside(D, C, opts);
        if (!outside.value) throw std::logic_error("stabilizer_params: dual \\ code is empty");
        q.d_exact = *outside.value;
        q.d_lower = *outside.value;
        if (min_wt_C) q.pure = *min_wt_C >= *outside.value;
        else if (C.dimension() == 0) q.pure = true;  // dual \ 0: d = d(C^perp) by definition
    } catch (const std::invalid_argument&) {
        auto bound = cyclic_lower_bound(D, opts);
        q.d_lower = bound.bound.value_or(1);
    }
    return q;
}

/*
 * Nearly-self-orthogonal construction over F_4: an (n, 2^k) additive code C
 * with r = (2n - k - dim(C ^ C^{perp_s}))/2 yields an
 * [[n + r, k - n + r, d]]_2 code with d >= min{d(C), d(C + C^{perp_s}) + 1}.
 * When C contains its dual this reduces to the stabilizer parameters (r = 0).
 */
inline QuantumParams nearly_self_orthogonal_params(const AdditiveCyclicCode& C,
                                                   const EnumOptions& opts = {}) {
    if (C.p() != 2)
        throw std::invalid_argument("nearly_self_orthogonal_params: construction requires p = 2");
    OrthogonalityReport rep = classify_orthogonality(C);
    const std::size_t n = C.n();
    const std::size_t kdim = C.dimension();
    const std::size_t num = 2 * n - kdim - rep.dim_intersection;
    if (num % 2 != 0) throw std::logic_error("nearly_self_orthogonal_params: odd defect");
    const std::size_t r = num / 2;
    if (kdim + r < n)
        throw std::invalid_argument("nearly_self_orthogonal_params: vacuous code (k - n + r < 0)");

    QuantumParams q;
    q.p = 2;
    q.n = n + r;
    q.k = kdim + r - n;
    q.r = r;
    q.construction = "nearly_self_orthogonal";

    AdditiveCyclicCode sum = code_sum(C, dual(C));

    struct Branch {
        bool infinite = false;  // the branch code is zero, so it imposes no constraint
        int candidate = 1;      // its contribution to the min (already offset for the +1 branch)
        bool exact = false;
    };
    auto eval_branch = [&](const AdditiveCyclicCode& code, int offset) {
        Branch br;
        try {
            DistanceResult dr = min_weight_exhaustive(code, opts);
            if (!dr.value) {
                br.infinite = true;
            } else {
                br.candidate = *dr.value + offset;
                br.exact = true;
            }
        } catch (const std::invalid_argument&) {
            // beyond budget (hence nonzero); fall back to the cyclic bound
            br.candidate = cyclic_lower_bound(code, opts).bound.value_or(1) + offset;
            br.exact = false;
        }
        return br;
    };
    const Branch own = eval_branch(C, 0);
    const Branch grown = eval_branch(sum, 1);

    std::optional<int> d;
    for (const Branch& br : {own, grown}) {
        if (br.infinite) continue;
        if (!d || br.candidate < *d) d = br.candidate;
    }
    if (d) {
        q.d_lower = *d;
        /*
         * Exact iff an exact branch attains the min: any other branch is
         * bounded below by its own candidate, which is >= the min.
         */
        for (const Branch& br : {own, grown})
            if (!br.infinite && br.exact && br.candidate == *d) q.d_exact = *d;
    } else {
        q.d_lower = 1;
    }
    return q;
}

/*
 * Secondary constructions applied once:
 *   (1) k > 0            -> [[n+1, k, d]]
 *   (2) pure, n, d >= 2  -> [[n-1, k+1, d-1]], still pure
 *   (3) k > 1            -> [[n, k-1, d]]
 * Inapplicable rules are skipped.
 */
inline std::vector<QuantumParams> secondary_constructions(const QuantumParams& q) {
    std::vector<QuantumParams> out;
    const int d = q.best_d();
    if (q.k > 0) {
        QuantumParams t = q;
        t.n = q.n + 1;
        t.construction = "lengthen(" + q.to_string() + ")";
        t.pure.reset();
        t.r = 0;
        t.d_claimed.reset();
        out.push_back(t);
    }
    if (q.pure.value_or(false) && q.n >= 2 && d >= 2) {
        QuantumParams t = q;
        t.n = q.n - 1;
        t.k = q.k + 1;
        t.d_lower = d - 1;
        if (t.d_exact) t.d_exact = d - 1;
        t.pure = true;
        t.construction = "puncture(" + q.to_string() + ")";
        t.r = 0;
        t.d_claimed.reset();
        out.push_back(t);
    }
    if (q.k > 1) {
        QuantumParams t = q;
        t.k = q.k - 1;
        t.construction = "subcode(" + q.to_string() + ")";
        t.pure.reset();
        t.r = 0;
        t.d_claimed.reset();
        out.push_back(t);
    }
    return out;
}

/*
 * Closure of the secondary constructions under explicit bounds: lengthen at
 * most `max_lengthen` times and never drop k below `min_k`. Returns the set
 * of derived (n, k, d) triples, excluding the seed.
 */
inline std::set<std::tuple<std::size_t, std::size_t, int>> secondary_closure(
    const QuantumParams& seed, std::size_t max_lengthen, std::size_t min_k) {
    std::set<std::tuple<std::size_t, std::size_t, int>> seen;
    std::vector<std::pair<QuantumParams, std::size_t>> frontier{{seed, 0}};
    std::set<std::tuple<std::size_t, std::size_t, int>> visited{
        {seed.n, seed.k, seed.best_d()}};
    while (!frontier.empty()) {
        auto [cur, used_lengthen] = frontier.back();
        frontier.pop_back();
        for (const auto& nxt : secondary_constructions(cur)) {
            const bool lengthened = nxt.n > cur.n;
            if (lengthened && used_lengthen >= max_lengthen) continue;
            if (nxt.k < min_k) continue;
            auto key = std::make_tuple(nxt.n, nxt.k, nxt.best_d());
            if (!visited.insert(key).second) continue;
            seen.insert(key);
            frontier.push_back({nxt, used_lengthen + (lengthened ? 1 : 0)});
        }
    }
    return seen;
}

}  // namespace addcyc
