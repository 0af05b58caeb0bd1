#include "boole/linalg.hpp"

#include <utility>

namespace boole {

namespace {

// Row-reduces in place; returns the pivot column of every pivot row, in order.
std::vector<std::size_t> reduce(std::vector<std::vector<Rat>>& m,
                                std::size_t num_cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < num_cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rat inv = 1 / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (std::size_t j = 0; j < m[i].size(); ++j) {
                m[i][j] -= f * m[row][j];
            }
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

std::size_t matrix_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    return reduce(m, m[0].size()).size();
}

SolveResult solve_linear(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
    const std::size_t num_cols = m.empty() ? 0 : m[0].size();
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
    const auto pivot_cols = reduce(m, num_cols);
    // A pivot in the appended column marks an inconsistent system.
    for (std::size_t i = pivot_cols.size(); i < m.size(); ++i) {
        if (m[i][num_cols] != 0) return {SolveKind::Inconsistent, {}};
    }
    if (pivot_cols.size() < num_cols) return {SolveKind::Underdetermined, {}};
    std::vector<Rat> x(num_cols, Rat(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
        x[pivot_cols[i]] = m[i][num_cols];
    }
    return {SolveKind::Unique, std::move(x)};
}

std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> m,
                                        std::size_t num_cols) {
    const auto pivot_cols = reduce(m, num_cols);
    std::vector<bool> is_pivot(num_cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free_col = 0; free_col < num_cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(num_cols, Rat(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            v[pivot_cols[i]] = -m[i][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace boole
