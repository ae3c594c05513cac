#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fp.hpp"

namespace addcyc {

// Dense matrix over F_p, row major. Sized for code work (columns <= a few hundred).
struct FpMat {
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint32_t> data;

    FpMat() = default;
    FpMat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::uint32_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    void append_row(const std::vector<std::uint32_t>& row) {
        if (cols == 0) cols = row.size();
        if (row.size() != cols) throw std::invalid_argument("FpMat: row length mismatch");
        data.insert(data.end(), row.begin(), row.end());
        ++rows;
    }

    std::vector<std::uint32_t> row(std::size_t r) const {
        return std::vector<std::uint32_t>(data.begin() + static_cast<std::ptrdiff_t>(r * cols),
                                          data.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
    }
};

// In-place reduced row echelon form; returns the pivot column per pivot row.
inline std::vector<std::size_t> mat_rref(const PrimeField& F, FpMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t sel = r;
        while (sel < m.rows && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        const std::uint32_t inv = F.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const std::uint32_t f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t mat_rank(const PrimeField& F, FpMat m) { return mat_rref(F, m).size(); }

// Canonical bytes identifying a row space: the nonzero rows of the RREF.
inline std::vector<std::uint32_t> row_space_signature(const PrimeField& F, FpMat m) {
    auto pivots = mat_rref(F, m);
    std::vector<std::uint32_t> sig;
    sig.push_back(static_cast<std::uint32_t>(m.cols));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < m.cols; ++c) sig.push_back(m.at(r, c));
    return sig;
}

// Basis of the right nullspace {v : m v = 0}, one basis vector per row.
inline FpMat mat_nullspace(const PrimeField& F, FpMat m) {
    const std::size_t n = m.cols;
    auto pivots = mat_rref(F, m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    FpMat basis(0, n);
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint32_t> v(n, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = F.neg(m.at(r, free_col));
        basis.append_row(v);
    }
    return basis;
}

/*
 * Membership test against a precomputed RREF: reduces v by the pivot rows
 * and checks that the residual vanishes.
 */
inline bool in_row_space(const PrimeField& F, const FpMat& rref, const std::vector<std::size_t>& pivots,
                         std::vector<std::uint32_t> v) {
    if (v.size() != rref.cols) throw std::invalid_argument("in_row_space: length mismatch");
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const std::uint32_t f = v[pivots[r]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < rref.cols; ++j) v[j] = F.sub(v[j], F.mul(f, rref.at(r, j)));
    }
    for (auto x : v)
        if (x) return false;
    return true;
}

}  // namespace addcyc
