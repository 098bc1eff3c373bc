#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace surflines {

/// Scalar types supporting exact field arithmetic. zero_like / one_like build
/// constants in the same field as a given element (cyclotomic elements carry
/// their conductor, so constants cannot be made from nothing).
template <class F>
concept ExactField = requires(F a, F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { inverse(a) } -> std::convertible_to<F>;
    { zero_like(a) } -> std::convertible_to<F>;
    { one_like(a) } -> std::convertible_to<F>;
};

template <ExactField F>
using Matrix = std::vector<std::vector<F>>;

/// In-place reduced row echelon form by Gauss-Jordan elimination.
/// Returns the pivot column of each nonzero row, in order; rank = size.
template <ExactField F>
std::vector<std::size_t> rref(Matrix<F>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && is_zero(rows[pivot][col])) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        const F inv = inverse(rows[r][col]);
        for (std::size_t j = col; j < ncols; ++j) rows[r][j] = rows[r][j] * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || is_zero(rows[i][col])) continue;
            const F factor = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j) rows[i][j] = rows[i][j] - factor * rows[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

template <ExactField F>
std::size_t rank(Matrix<F> rows) {
    return rref(rows).size();
}

/// Basis of the right null space {v : rows * v = 0}, one vector per free column.
/// Each basis vector has a 1 in its free column and 0 in the other free columns.
template <ExactField F>
std::vector<std::vector<F>> kernel(Matrix<F> rows) {
    std::vector<std::vector<F>> basis;
    if (rows.empty()) return basis;
    const std::size_t ncols = rows.front().size();
    const auto pivots = rref(rows);
    const F zero = zero_like(rows.front().front());
    const F one = one_like(rows.front().front());
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(ncols, zero);
        v[free] = one;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = zero - rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace surflines
