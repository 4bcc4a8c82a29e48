#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <utility>

// Exact linear algebra over the field with three elements.
//
// Entries are stored as integers {0,1,2}; all arithmetic is mod 3. Dense
// carriers are Eigen matrices so callers can use the usual block/expression
// machinery; the field-specific routines (reduction, elimination, duals) are
// free functions in this namespace.

namespace symcode::gf3 {

using Elem = std::uint8_t;

using Matrix = Eigen::Matrix<Elem, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::Matrix<Elem, 1, Eigen::Dynamic>;
using Index = Eigen::Index;

constexpr Elem add(Elem a, Elem b) { return static_cast<Elem>((a + b) % 3); }
constexpr Elem sub(Elem a, Elem b) { return static_cast<Elem>((a + 3 - b) % 3); }
constexpr Elem mul(Elem a, Elem b) { return static_cast<Elem>((a * b) % 3); }
constexpr Elem neg(Elem a) { return static_cast<Elem>((3 - a) % 3); }

// 1 and 2 are their own inverses.
constexpr Elem inv(Elem a) {
    if (a == 0) throw std::domain_error("gf3: zero has no inverse");
    return a;
}

inline bool valid(const Matrix& m) { return (m.array() <= 2).all(); }

template <typename Derived>
Matrix reduced(const Eigen::MatrixBase<Derived>& m) {
    return m.derived().unaryExpr([](auto x) { return static_cast<Elem>(((x % 3) + 3) % 3); });
}

// Matrix product over the field. Products are accumulated in int (entries are
// at most 2, so no overflow for any practical inner dimension).
inline Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("gf3::matmul: shape mismatch");
    Eigen::MatrixXi prod = a.cast<int>() * b.cast<int>();
    return prod.unaryExpr([](int x) { return static_cast<Elem>(x % 3); }).cast<Elem>();
}

inline Matrix matadd(const Matrix& a, const Matrix& b) {
    return (a.cast<int>() + b.cast<int>()).unaryExpr([](int x) { return x % 3; }).cast<Elem>();
}

inline Elem dot(const Vector& a, const Vector& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("gf3::dot: length mismatch");
    int s = (a.cast<int>().array() * b.cast<int>().array()).sum();
    return static_cast<Elem>(s % 3);
}

inline Index hamming_weight(const Vector& v) { return (v.array() != 0).count(); }

// Scales column j by 2 in place (the only nontrivial rescaling over GF(3)).
inline void negate_column(Matrix& m, Index j) {
    if (j < 0 || j >= m.cols()) throw std::out_of_range("gf3::negate_column: bad index");
    for (Index i = 0; i < m.rows(); ++i) m(i, j) = neg(m(i, j));
}

// Reduced row-echelon form and rank. The RREF over a field is unique, so it
// doubles as a canonical form for row spaces.
std::pair<Matrix, int> rref(Matrix m);

int rank(const Matrix& m);

// Basis of the null space  { x : m x^T = 0 }, returned as rows; empty matrix
// (0 x n) when the map is injective.
Matrix null_space_rows(const Matrix& m);

// True iff the row vector lies in the row space of the (already reduced or
// not) matrix.
bool in_row_space(const Matrix& m, const Vector& v);

}  // namespace symcode::gf3
