#pragma once

#include <cstddef>
#include <vector>

#include "logder/cyclotomic.hpp"

namespace logder {

/// Dense row-major matrix over a cyclotomic field. Rows may be empty; all
/// rows must share a length.
using Matrix = std::vector<std::vector<CycloNum>>;

/// In-place reduced row echelon form. Returns the pivot column indices in
/// increasing order. Exact arithmetic, so no pivot selection heuristics are
/// needed.
inline std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i) {
            if (!m[i][c].is_zero()) { sel = i; break; }
        }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        CycloNum inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            CycloNum factor = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - factor * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t matrix_rank(Matrix m) { return rref(m).size(); }

/// Basis of the right kernel of m, one vector per free column. f supplies
/// the coefficient field when the matrix has no rows.
inline std::vector<std::vector<CycloNum>> kernel_basis(Matrix m, const CycloField& f,
                                                       size_t cols) {
    for (const auto& row : m)
        if (row.size() != cols) throw error("kernel: ragged matrix");
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<CycloNum>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<CycloNum> v(cols, CycloNum(f, 0));
        v[c] = CycloNum(f, 1);
        for (size_t p = 0; p < pivots.size(); ++p)
            v[pivots[p]] = CycloNum(f, 0) - m[p][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace logder
