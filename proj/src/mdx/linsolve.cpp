#include "mdx/linsolve.hpp"

#include "mdx/errors.hpp"

namespace mdx {

LinearSolution solve_linear(std::vector<std::vector<Rational>> m,
                            std::vector<Rational> rhs) {
    size_t rows = m.size();
    if (rhs.size() != rows) throw structural_error("rhs length mismatch");
    size_t cols = rows == 0 ? 0 : m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw structural_error("ragged matrix");

    std::vector<int> pivot_row_of_col(cols, -1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = rank;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[rank]);
        std::swap(rhs[sel], rhs[rank]);
        Rational inv = Rational(1) / m[rank][col];
        for (size_t c = col; c < cols; ++c) m[rank][c] *= inv;
        rhs[rank] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational factor = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
            rhs[r] -= factor * rhs[rank];
        }
        pivot_row_of_col[col] = static_cast<int>(rank);
        ++rank;
    }

    LinearSolution out;
    bool consistent = true;
    for (size_t r = rank; r < rows; ++r)
        if (rhs[r] != 0) consistent = false;
    if (consistent) {
        std::vector<Rational> x(cols, Rational(0));
        for (size_t col = 0; col < cols; ++col)
            if (pivot_row_of_col[col] >= 0) x[col] = rhs[pivot_row_of_col[col]];
        out.particular = std::move(x);
    }
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_row_of_col[free_col] >= 0) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free_col] = Rational(1);
        for (size_t col = 0; col < cols; ++col)
            if (pivot_row_of_col[col] >= 0)
                v[col] = -m[pivot_row_of_col[col]][free_col];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

}  // namespace mdx
