#pragma once

/**
 * @file linear.hpp
 * @brief Gaussian elimination over an arbitrary field.
 */

#include <stdexcept>
#include <utility>
#include <vector>

#include "../domain.hpp"

namespace rings {

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

template <class E>
struct LinearSolution {
    SolveStatus status;
    std::size_t rank;
    /// A solution (free variables set to zero) unless inconsistent.
    std::vector<E> x;
};

/// Solves lhs * x = rhs with first-nonzero pivoting.
template <class D>
LinearSolution<typename D::Elem> gaussian_solve(const D& d, std::vector<std::vector<typename D::Elem>> a,
                                                std::vector<typename D::Elem> b) {
    static_assert(D::is_field, "Gaussian elimination needs a field");
    using E = typename D::Elem;
    std::size_t rows = a.size();
    if (b.size() != rows) throw std::invalid_argument("right-hand side has wrong length");
    std::size_t cols = rows ? a[0].size() : 0;
    for (const auto& r : a)
        if (r.size() != cols) throw std::invalid_argument("ragged matrix");
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && d.is_zero(a[p][col])) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[row]);
        std::swap(b[p], b[row]);
        E inv = d.inv(a[row][col]);
        for (std::size_t j = col; j < cols; ++j) a[row][j] = d.mul(a[row][j], inv);
        b[row] = d.mul(b[row], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || d.is_zero(a[i][col])) continue;
            E f = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] = d.sub(a[i][j], d.mul(f, a[row][j]));
            b[i] = d.sub(b[i], d.mul(f, b[row]));
        }
        pivots.push_back(col);
        ++row;
    }
    LinearSolution<E> out{SolveStatus::Unique, pivots.size(), {}};
    for (std::size_t i = row; i < rows; ++i)
        if (!d.is_zero(b[i])) {
            out.status = SolveStatus::Inconsistent;
            return out;
        }
    out.x.assign(cols, d.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) out.x[pivots[i]] = b[i];
    if (pivots.size() < cols) out.status = SolveStatus::Underdetermined;
    return out;
}

}  // namespace rings
