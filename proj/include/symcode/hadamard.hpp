#pragma once

#include "symcode/designs.hpp"
#include "symcode/gf3.hpp"
#include "symcode/graphs.hpp"
#include "symcode/words.hpp"

#include <Eigen/Dense>

#include <optional>

namespace symcode::hadamard {

using Matrix = Eigen::MatrixXi;  // entries +-1

bool is_pm1(const Matrix& m);

// H H^T = n I over the integers.
bool is_hadamard(const Matrix& h);

// All row sums equal.
bool is_regular(const Matrix& h);

bool is_normalized(const Matrix& h);

// Full-weight ternary word <-> +-1 row under 1 <-> +1, 2 <-> -1.
Eigen::RowVectorXi gf3_to_pm1(const gf3::Vector& v);
gf3::Vector pm1_to_gf3(const Eigen::RowVectorXi& row);
Eigen::RowVectorXi word_to_pm1(const gf3::Word& w, int n);

// Make the selected row and column all-ones by sign changes: first negate the
// columns that are -1 in the row, then the rows that are -1 in the column.
Matrix normalize(const Matrix& h, Eigen::Index row, Eigen::Index col);

// Paley type II Hadamard matrix of order 2(q+1), from the symmetric
// conference matrix of a prime q = 1 (mod 4).
Matrix paley_type_ii(int q);

// A pair of signed permutations (P, Q) with (P H Q^T)(i,j) =
// row_sign[i] col_sign[j] H(row_perm^-1 ... ); concretely apply() sends entry
// (i,j) of the source to (row_perm[i], col_perm[j]) with both signs applied.
struct MonomialPair {
    std::vector<int> row_perm;
    std::vector<int> row_sign;  // +-1
    std::vector<int> col_perm;
    std::vector<int> col_sign;  // +-1

    Matrix apply(const Matrix& h) const;
    friend bool operator==(const MonomialPair&, const MonomialPair&) = default;
    bool operator<(const MonomialPair& o) const;
};

// The 4n-vertex signed incidence graph whose automorphisms are exactly the
// monomial pairs fixing h (simultaneous negation of all rows and columns
// included). Vertices: rows +, rows -, columns +, columns -.
graphs::ColoredGraph signed_graph(const Matrix& h);

MonomialPair monomial_from_vertex_map(const graphs::Perm& phi, int n);

struct AutGroup {
    unsigned long long order = 1;  // full monomial group, center included
    std::vector<MonomialPair> generators;
};

AutGroup automorphism_group(const Matrix& h, const Budget& budget = Budget::unlimited());

// Witness with witness.apply(h1) == h2, if the matrices are monomially
// equivalent. Among all witnesses the lexicographically least (by row_perm,
// row_sign, col_perm, col_sign) is returned when the automorphism group is
// small enough to enumerate; otherwise a deterministic canonical witness.
std::optional<MonomialPair> monomial_equiv(const Matrix& h1, const Matrix& h2,
                                           const Budget& budget = Budget::unlimited());

// Shared canonical certificate for equivalence bookkeeping.
std::vector<std::uint64_t> certificate(const Matrix& h,
                                       const Budget& budget = Budget::unlimited());

// The 3-(n, n/2, n/4-1) design carried by a normalized Hadamard matrix: for
// every non-all-one row, the +1 support and the -1 support are blocks
// (n points, 2(n-1) blocks).
designs::Design hadamard_3design(const Matrix& h);

}  // namespace symcode::hadamard
