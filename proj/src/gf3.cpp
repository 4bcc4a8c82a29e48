#include "symcode/gf3.hpp"

namespace symcode::gf3 {

std::pair<Matrix, int> rref(Matrix m) {
    const Index rows = m.rows(), cols = m.cols();
    Index pr = 0;
    for (Index pc = 0; pc < cols && pr < rows; ++pc) {
        Index pivot = -1;
        for (Index r = pr; r < rows; ++r)
            if (m(r, pc) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != pr) m.row(pivot).swap(m.row(pr));
        if (m(pr, pc) == 2)
            for (Index c = pc; c < cols; ++c) m(pr, c) = mul(m(pr, c), 2);
        for (Index r = 0; r < rows; ++r) {
            if (r == pr) continue;
            Elem f = m(r, pc);
            if (f == 0) continue;
            for (Index c = pc; c < cols; ++c) m(r, c) = sub(m(r, c), mul(f, m(pr, c)));
        }
        ++pr;
    }
    return {std::move(m), static_cast<int>(pr)};
}

int rank(const Matrix& m) { return rref(m).second; }

Matrix null_space_rows(const Matrix& m) {
    const Index n = m.cols();
    auto [r, rk] = rref(m);
    // Locate pivot columns of the reduced form.
    std::vector<Index> pivot_col(rk);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int i = 0; i < rk; ++i) {
        Index c = 0;
        while (c < n && r(i, c) == 0) ++c;
        pivot_col[i] = c;
        is_pivot[static_cast<std::size_t>(c)] = true;
    }
    Matrix basis(n - rk, n);
    basis.setZero();
    Index row = 0;
    for (Index free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        basis(row, free) = 1;
        for (int i = 0; i < rk; ++i) basis(row, pivot_col[i]) = neg(r(i, free));
        ++row;
    }
    return basis;
}

bool in_row_space(const Matrix& m, const Vector& v) {
    if (v.cols() != m.cols()) throw std::invalid_argument("gf3::in_row_space: length mismatch");
    auto [r, rk] = rref(m);
    Vector w = v;
    for (int i = 0; i < rk; ++i) {
        Index c = 0;
        while (c < m.cols() && r(i, c) == 0) ++c;
        if (c == m.cols()) break;
        Elem f = w(c);
        if (f == 0) continue;
        for (Index j = c; j < m.cols(); ++j) w(j) = sub(w(j), mul(f, r(i, j)));
    }
    return (w.array() == 0).all();
}

}  // namespace symcode::gf3
