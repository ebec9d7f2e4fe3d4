#pragma once

#include <optional>
#include <vector>

#include "mhlab/errors.hpp"

namespace mhlab {

// Exact Gauss-Jordan elimination over an arbitrary field F (Rational, RatFun).
// F needs +, -, *, /, is_zero(), and copy semantics; `one` supplies the
// multiplicative identity so F is not required to be default-constructible
// into a usable state.

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
int rref_in_place(Matrix<F>& m, std::vector<int>& pivot_cols) {
    pivot_cols.clear();
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // Prefer the structurally smallest pivot to keep fractions tame.
        size_t best = rows;
        for (size_t i = r; i < rows; ++i) {
            if (!m[i][c].is_zero() && best == rows) best = i;
        }
        if (best == rows) continue;
        std::swap(m[r], m[best]);
        F inv = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] / inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            F f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivot_cols.push_back(static_cast<int>(c));
        ++r;
    }
    return static_cast<int>(r);
}

// Basis of { x : M x = 0 }, one vector per free column, in column order.
template <class F>
Matrix<F> kernel_basis(Matrix<F> m, size_t cols, const F& one) {
    F zero = one - one;
    std::vector<int> pivots;
    rref_in_place(m, pivots);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    Matrix<F> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(cols, zero);
        v[f] = one;
        for (size_t pi = 0; pi < pivots.size(); ++pi) {
            size_t pc = static_cast<size_t>(pivots[pi]);
            if (pc < f) v[pc] = zero - m[pi][f];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
struct LinearSolution {
    bool consistent = false;
    std::vector<F> particular;  // valid when consistent
    Matrix<F> kernel;
};

// Solves A x = b exactly; returns a particular solution and a kernel basis.
template <class F>
LinearSolution<F> solve_linear(Matrix<F> a, const std::vector<F>& rhs, const F& one) {
    if (a.size() != rhs.size()) throw StructuralError("solve_linear: dimension mismatch");
    F zero = one - one;
    size_t cols = a.empty() ? 0 : a[0].size();
    Matrix<F> aug = a;
    for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
    std::vector<int> pivots;
    rref_in_place(aug, pivots);
    LinearSolution<F> out;
    out.consistent = true;
    for (int p : pivots) {
        if (static_cast<size_t>(p) == cols) out.consistent = false;  // pivot in the rhs column
    }
    if (out.consistent) {
        out.particular.assign(cols, zero);
        for (size_t pi = 0; pi < pivots.size(); ++pi) {
            out.particular[static_cast<size_t>(pivots[pi])] = aug[pi][cols];
        }
    }
    out.kernel = kernel_basis(std::move(a), cols, one);
    return out;
}

// Row-reduces a list of vectors into a canonical reduced echelon basis,
// pivoting on the first nonzero coordinate in index order.
template <class F>
Matrix<F> reduced_row_basis(Matrix<F> rows, const F& one) {
    std::vector<int> pivots;
    int rank = rref_in_place(rows, pivots);
    rows.resize(static_cast<size_t>(rank));
    (void)one;
    return rows;
}

template <class F>
int matrix_rank(Matrix<F> m) {
    std::vector<int> pivots;
    return rref_in_place(m, pivots);
}

}  // namespace mhlab
