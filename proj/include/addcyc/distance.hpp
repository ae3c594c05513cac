#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "additive_code.hpp"
#include "symplectic.hpp"

namespace addcyc {

struct EnumOptions {
    int budget_log2 = 26;  // refuse scans with more than 2^budget_log2 combinations
    unsigned threads = 1;
    int abort_below = 0;  // > 0: stop once any weight below this is seen
};

struct DistanceResult {
    enum class Method { Exhaustive, BoundOnly };
    std::optional<int> value;  // nullopt: the scanned set is empty (zero code)
    Method method = Method::Exhaustive;
    std::optional<int> bound;
    std::optional<QuadRingElem> witness;
    bool aborted = false;          // true when an abort_below trigger stopped the scan
    std::uint64_t enumerated = 0;  // codewords actually visited
};

namespace detail {

struct ScanOutcome {
    std::optional<int> weight;
    std::vector<std::uint8_t> combo;  // digit per generator row, lex-least among minima
    bool aborted = false;
    std::uint64_t enumerated = 0;
};

// lexicographic order on combination digit vectors (index 0 first)
inline bool combo_less(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return x[i] < y[i];
    return false;
}

inline std::vector<std::uint8_t> mask_to_combo(std::uint64_t mask, std::size_t dim) {
    std::vector<std::uint8_t> c(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) c[i] = static_cast<std::uint8_t>((mask >> i) & 1);
    return c;
}

/*
 * Binary scan over all 2^dim - 1 nonzero combinations of packed rows,
 * Gray-coded so each step XORs a single row. Codewords are held as two
 * bit-packed words (a | b); the weight is popcount(a | b).
 *
 * Combinations with index below `skip` are not visited; with rows ordered
 * subspace-first this skips a whole subcode coset (indices [0, 2^dim_sub)
 * are exactly the combinations supported on the leading rows).
 */
inline ScanOutcome scan_binary(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& rows,
                               std::uint64_t skip, const EnumOptions& opts) {
    const std::size_t dim = rows.size();
    const std::uint64_t end = std::uint64_t(1) << dim;
    ScanOutcome out;
    if (skip >= end) return out;

    const unsigned threads = std::max(1u, opts.threads);
    std::atomic<bool> stop{false};

    struct Partial {
        int weight = -1;
        std::uint64_t mask = 0;
        bool aborted = false;
        std::uint64_t enumerated = 0;
    };
    std::vector<Partial> partials(threads);

    auto worker = [&](unsigned idx) {
        const std::uint64_t total = end - skip;
        const std::uint64_t chunk = total / threads;
        const std::uint64_t lo = skip + idx * chunk;
        const std::uint64_t hi = (idx + 1 == threads) ? end : lo + chunk;
        if (lo >= hi) return;
        Partial best;
        std::uint64_t acc_a = 0, acc_b = 0;
        const std::uint64_t gray_lo = lo ^ (lo >> 1);
        for (std::size_t i = 0; i < dim; ++i)
            if ((gray_lo >> i) & 1) {
                acc_a ^= rows[i].first;
                acc_b ^= rows[i].second;
            }
        std::uint64_t mask = gray_lo;
        for (std::uint64_t t = lo;;) {
            if (t >= skip && mask != 0) {
                ++best.enumerated;
                const int w = std::popcount(acc_a | acc_b);
                if (best.weight < 0 || w < best.weight) {
                    best.weight = w;
                    best.mask = mask;
                    if (opts.abort_below > 0 && w < opts.abort_below) {
                        best.aborted = true;
                        stop.store(true, std::memory_order_relaxed);
                        break;
                    }
                } else if (w == best.weight) {
                    // lex-least tie break: 0 at the first differing row index wins
                    const std::uint64_t diff = mask ^ best.mask;
                    if (diff && ((mask >> std::countr_zero(diff)) & 1) == 0) best.mask = mask;
                }
            }
            if ((t & 0xFFFF) == 0 && stop.load(std::memory_order_relaxed)) break;
            ++t;
            if (t >= hi) break;
            const int flip = std::countr_zero(t);
            acc_a ^= rows[static_cast<std::size_t>(flip)].first;
            acc_b ^= rows[static_cast<std::size_t>(flip)].second;
            mask ^= std::uint64_t(1) << flip;
        }
        partials[idx] = best;
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i);
        for (auto& th : pool) th.join();
    }

    Partial merged;
    for (const auto& pr : partials) {
        merged.enumerated += pr.enumerated;
        merged.aborted = merged.aborted || pr.aborted;
        if (pr.weight < 0) continue;
        if (merged.weight < 0 || pr.weight < merged.weight) {
            merged.weight = pr.weight;
            merged.mask = pr.mask;
        } else if (pr.weight == merged.weight) {
            const std::uint64_t diff = pr.mask ^ merged.mask;
            if (diff && ((pr.mask >> std::countr_zero(diff)) & 1) == 0) merged.mask = pr.mask;
        }
    }
    out.enumerated = merged.enumerated;
    if (merged.weight >= 0) {
        out.weight = merged.weight;
        out.combo = mask_to_combo(merged.mask, dim);
        out.aborted = merged.aborted;
    }
    return out;
}

/*
 * Reflected Gray scan for odd p: a loopless mixed-radix walk in which one
 * combination digit moves by +-1 per step, so one row addition/subtraction
 * updates the codeword. Coordinates are kept as byte arrays.
 */
inline ScanOutcome scan_general(const PrimeField& F, const std::vector<std::vector<std::uint8_t>>& rows,
                                std::size_t width, std::uint64_t skip, std::uint64_t total,
                                const EnumOptions& opts) {
    const std::size_t dim = rows.size();
    const std::uint32_t p = F.p();
    ScanOutcome out;

    std::vector<std::uint8_t> digits(dim, 0);
    std::vector<std::size_t> focus(dim + 1);
    std::vector<int> dir(dim, 1);
    for (std::size_t i = 0; i <= dim; ++i) focus[i] = i;

    std::vector<std::uint32_t> acc(width, 0);
    const std::size_t half = width / 2;

    int best_w = -1;
    std::vector<std::uint8_t> best_combo;
    bool aborted = false;

    for (std::uint64_t t = 1; t < total; ++t) {
        const std::size_t j = focus[0];
        focus[0] = 0;
        if (j == dim) break;
        const int step = dir[j];
        digits[j] = static_cast<std::uint8_t>(digits[j] + step);
        if (digits[j] == 0 || digits[j] == p - 1) {
            dir[j] = -dir[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
        if (step > 0)
            for (std::size_t c = 0; c < width; ++c) acc[c] = F.add(acc[c], rows[j][c]);
        else
            for (std::size_t c = 0; c < width; ++c) acc[c] = F.sub(acc[c], rows[j][c]);

        if (t < skip) continue;
        ++out.enumerated;
        int w = 0;
        for (std::size_t c = 0; c < half; ++c) w += (acc[c] | acc[c + half]) != 0;
        if (best_w < 0 || w < best_w) {
            best_w = w;
            best_combo = digits;
            if (opts.abort_below > 0 && w < opts.abort_below) {
                aborted = true;
                break;
            }
        } else if (w == best_w && combo_less(digits, best_combo)) {
            best_combo = digits;
        }
    }
    if (best_w >= 0) {
        out.weight = best_w;
        out.combo = std::move(best_combo);
        out.aborted = aborted;
    }
    return out;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::size_t e, int budget_log2, const char* who) {
    long double est = 1.0L;
    for (std::size_t i = 0; i < e; ++i) est *= static_cast<long double>(base);
    if (est > static_cast<long double>(std::uint64_t(1) << std::min(budget_log2, 62)))
        throw std::invalid_argument(std::string(who) + ": exceeds enumeration budget");
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < e; ++i) v *= base;
    return v;
}

/*
 * Shared scan driver over generator rows given as flat F_p vectors of
 * length 2n (a-part | b-part). Rows are combined in index order; the
 * combinations with index below `skip` are omitted.
 */
inline ScanOutcome scan_rows(const PrimeField& F, const std::vector<std::vector<std::uint32_t>>& fp_rows,
                             std::size_t n, std::uint64_t skip, const EnumOptions& opts,
                             const char* who) {
    const std::size_t dim = fp_rows.size();
    const std::uint64_t total = checked_pow(F.p(), dim, opts.budget_log2, who);
    if (dim == 0) return {};
    if (F.p() == 2 && n <= 64) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> rows(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            std::uint64_t a = 0, b = 0;
            for (std::size_t i = 0; i < n; ++i) {
                a |= std::uint64_t(fp_rows[r][i] & 1) << i;
                b |= std::uint64_t(fp_rows[r][n + i] & 1) << i;
            }
            rows[r] = {a, b};
        }
        return scan_binary(rows, skip == 0 ? 1 : skip, opts);
    }
    std::vector<std::vector<std::uint8_t>> rows(dim, std::vector<std::uint8_t>(2 * n));
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t i = 0; i < 2 * n; ++i) rows[r][i] = static_cast<std::uint8_t>(fp_rows[r][i]);
    return scan_general(F, rows, 2 * n, skip == 0 ? 1 : skip, total, opts);
}

inline QuadRingElem combo_to_codeword(const AdditiveCyclicCode& C,
                                      const std::vector<std::vector<std::uint32_t>>& rows,
                                      const std::vector<std::uint8_t>& combo) {
    const PrimeField& F = C.cosets().field;
    std::vector<std::uint32_t> v(2 * C.n(), 0);
    for (std::size_t r = 0; r < combo.size(); ++r) {
        if (combo[r] == 0) continue;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(v[i], F.mul(combo[r], rows[r][i]));
    }
    return C.cosets().ring.from_fp_vector(v);
}

inline std::vector<std::vector<std::uint32_t>> matrix_rows(const FpMat& m) {
    std::vector<std::vector<std::uint32_t>> rows(m.rows);
    for (std::size_t r = 0; r < m.rows; ++r) rows[r] = m.row(r);
    return rows;
}

}  // namespace detail

/*
 * Exact minimum weight by optimized exhaustive enumeration of all
 * p^dim - 1 nonzero codewords. Parallel partitions (p = 2) and the
 * single-threaded walk return identical values and, with the lex-least
 * combination tie-break, identical witnesses.
 */
inline DistanceResult min_weight_exhaustive(const AdditiveCyclicCode& C, const EnumOptions& opts = {}) {
    DistanceResult res;
    if (C.dimension() == 0) return res;  // zero code: no nonzero codewords
    auto rows = detail::matrix_rows(C.generator_matrix());
    auto scan = detail::scan_rows(C.cosets().field, rows, C.n(), 1, opts, "min_weight_exhaustive");
    res.value = scan.weight;
    res.aborted = scan.aborted;
    res.enumerated = scan.enumerated;
    if (scan.weight && !scan.aborted) res.witness = detail::combo_to_codeword(C, rows, scan.combo);
    return res;
}

/*
 * Minimum weight over C_big \ C_small. A basis of C_small is completed to a
 * basis of C_big; ordering the subcode rows first makes the skipped coset a
 * contiguous prefix of the combination counter, so no membership tests are
 * needed during the scan.
 */
inline DistanceResult min_weight_outside(const AdditiveCyclicCode& big, const AdditiveCyclicCode& small,
                                         const EnumOptions& opts = {}) {
    if (big.p() != small.p() || big.n() != small.n())
        throw std::invalid_argument("min_weight_outside: codes live in different rings");
    if (!small.is_subcode_of(big)) throw std::invalid_argument("min_weight_outside: codes are not nested");

    const PrimeField& F = big.cosets().field;
    std::vector<std::vector<std::uint32_t>> rows = detail::matrix_rows(small.generator_matrix());

    // deterministic completion: greedy rank extension over big's rows
    FpMat probe(0, 2 * big.n());
    for (const auto& r : rows) probe.append_row(r);
    std::size_t rank = mat_rank(F, probe);
    if (rank != small.dimension()) throw std::logic_error("min_weight_outside: subcode basis degenerate");
    for (std::size_t r = 0; r < big.generator_matrix().rows && rank < big.dimension(); ++r) {
        FpMat trial = probe;
        trial.append_row(big.generator_matrix().row(r));
        const std::size_t new_rank = mat_rank(F, trial);
        if (new_rank > rank) {
            probe = std::move(trial);
            rows.push_back(big.generator_matrix().row(r));
            rank = new_rank;
        }
    }
    if (rank != big.dimension()) throw std::logic_error("min_weight_outside: basis completion failed");

    DistanceResult res;
    if (big.dimension() == small.dimension()) return res;  // empty difference
    std::uint64_t skip = 1;
    for (std::size_t i = 0; i < small.dimension(); ++i) skip *= F.p();
    auto scan = detail::scan_rows(F, rows, big.n(), skip, opts, "min_weight_outside");
    res.value = scan.weight;
    res.aborted = scan.aborted;
    res.enumerated = scan.enumerated;
    if (scan.weight && !scan.aborted) res.witness = detail::combo_to_codeword(big, rows, scan.combo);
    return res;
}

/*
 * Exact minimum distance of the F_p linear cyclic code <gen> of length n;
 * nullopt for the zero code.
 */
inline std::optional<int> linear_cyclic_min_distance(const PrimeField& F, const Poly& gen, std::size_t n,
                                                     const EnumOptions& opts) {
    const Poly xn1 = x_pow_n_minus_one(F, n);
    Poly gbar = gen.is_zero() ? xn1 : poly_gcd(F, cyclic_reduce(F, gen, n), xn1);
    if (gbar.is_zero()) gbar = xn1;
    const std::size_t dim = n - static_cast<std::size_t>(gbar.degree());
    if (dim == 0) return std::nullopt;
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(dim);
    for (std::size_t t = 0; t < dim; ++t) {
        const Poly shifted = cyclic_shift(F, gbar, t, n);
        std::vector<std::uint32_t> row(2 * n, 0);
        for (std::size_t i = 0; i < n; ++i) row[i] = shifted.coeff(i);
        rows.push_back(std::move(row));
    }
    auto scan = detail::scan_rows(F, rows, n, 1, opts, "linear_cyclic_min_distance");
    return scan.weight;
}

struct CyclicBoundResult {
    std::optional<int> bound;  // nullopt: no information (or zero code)
    bool complete = true;      // false when a component scan exceeded the budget
    std::string rule;          // which specialization applied
    std::vector<std::pair<std::string, std::optional<int>>> parts;
};

namespace detail {

inline Poly code_gcd(const PrimeField& F, const Poly& v, std::size_t n) {
    const Poly xn1 = x_pow_n_minus_one(F, n);
    if (v.is_zero()) return xn1;
    Poly r = poly_gcd(F, cyclic_reduce(F, v, n), xn1);
    return r.is_zero() ? xn1 : r;
}

struct BoundPart {
    std::string name;
    std::optional<int> d;  // nullopt: the code is zero (discarded from the bound)
    bool known = true;     // false: enumeration exceeded the budget
};

inline BoundPart bound_part(const PrimeField& F, const std::string& name, const Poly& gen, std::size_t n,
                            const EnumOptions& opts) {
    BoundPart part{name, std::nullopt, true};
    try {
        part.d = linear_cyclic_min_distance(F, gen, n, opts);
    } catch (const std::invalid_argument&) {
        part.known = false;
    }
    return part;
}

}  // namespace detail

/*
 * Minimum distance lower bound from the companion F_p linear cyclic codes
 * of the canonical triple:
 *   D1 = <g>, D2 = <gcd(k, h)>, D3 = <gcd(G k, h)>, D4 = <g S / gcd(x^n-1, k)>
 * with G = (x^n-1)/gcd(x^n-1, g) and S generating <k> intersect <h>; the
 * bound is min{d(D3), d(D4), max{d(D1), d(D2)}}. Zero companion codes are
 * dropped. With k = 0 the bound collapses to min{d(<g>), d(<h>)}; with
 * h = 0 the fourth code becomes <(x^n-1)/gcd(x^n-1, k) * g>.
 */
inline CyclicBoundResult cyclic_lower_bound(const AdditiveCyclicCode& C, const EnumOptions& opts = {}) {
    const PrimeField& F = C.cosets().field;
    const std::size_t n = C.n();
    const Poly& g = C.gen_g();
    const Poly& k = C.gen_k();
    const Poly& h = C.gen_h();
    const Poly xn1 = x_pow_n_minus_one(F, n);

    CyclicBoundResult res;
    std::vector<detail::BoundPart> mins;   // codes appearing as plain min terms
    std::vector<detail::BoundPart> maxes;  // codes combined with max before the min

    if (k.is_zero()) {
        res.rule = "omega_free";  // <g, omega h>: min{d(E1), d(E2)}
        mins.push_back(detail::bound_part(F, "E1", g, n, opts));
        mins.push_back(detail::bound_part(F, "E2", h, n, opts));
    } else if (h.is_zero()) {
        res.rule = "one_generator";
        const Poly gbar = detail::code_gcd(F, g, n);
        const Poly kbar = detail::code_gcd(F, k, n);
        const Poly G = poly_div(F, xn1, gbar);
        maxes.push_back(detail::bound_part(F, "C1", g, n, opts));
        maxes.push_back(detail::bound_part(F, "C2", k, n, opts));
        mins.push_back(detail::bound_part(F, "C3", cyclic_mul(F, G, k, n), n, opts));
        mins.push_back(detail::bound_part(
            F, "C4", cyclic_mul(F, poly_div(F, xn1, kbar), g, n), n, opts));
    } else {
        res.rule = "general";
        const Poly gbar = detail::code_gcd(F, g, n);
        const Poly kbar = detail::code_gcd(F, k, n);
        const Poly hbar = detail::code_gcd(F, h, n);
        const Poly G = poly_div(F, xn1, gbar);
        // S = lcm(kbar, hbar); S / kbar = hbar / gcd(kbar, hbar)
        const Poly s_over_kbar = poly_div(F, hbar, poly_gcd(F, kbar, hbar));
        maxes.push_back(detail::bound_part(F, "D1", g, n, opts));
        maxes.push_back(detail::bound_part(F, "D2", poly_gcd(F, k, h), n, opts));
        mins.push_back(detail::bound_part(
            F, "D3", poly_gcd(F, cyclic_mul(F, G, k, n), h), n, opts));
        mins.push_back(detail::bound_part(F, "D4", cyclic_mul(F, g, s_over_kbar, n), n, opts));
    }

    for (const auto& part : mins) res.parts.emplace_back(part.name, part.known ? part.d : std::nullopt);
    for (const auto& part : maxes) res.parts.emplace_back(part.name, part.known ? part.d : std::nullopt);
    for (const auto& part : mins)
        if (!part.known) res.complete = false;
    for (const auto& part : maxes)
        if (!part.known) res.complete = false;

    /*
     * The max term participates unless every argument is a known zero code.
     * An unknown argument may only raise the true max, so the max over the
     * known nonzero arguments is still a valid (possibly weaker) value; if
     * no argument is known the term cannot be evaluated at all.
     */
    bool term_present = false;
    bool max_known = false;
    int max_value = 0;
    for (const auto& part : maxes) {
        if (part.known && !part.d) continue;  // known zero code: discarded
        term_present = true;
        if (part.known && part.d) {
            max_known = true;
            if (*part.d > max_value) max_value = *part.d;
        }
    }

    std::optional<int> bound;
    bool usable = true;
    for (const auto& part : mins) {
        if (!part.known) {
            usable = false;
            break;
        }
        if (!part.d) continue;  // zero code: discarded
        if (!bound || *part.d < *bound) bound = *part.d;
    }
    if (usable && term_present) {
        if (!max_known)
            usable = false;
        else if (!bound || max_value < *bound)
            bound = max_value;
    }
    res.bound = usable ? bound : std::nullopt;
    return res;
}

}  // namespace addcyc
