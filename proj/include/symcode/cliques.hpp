#pragma once

#include "symcode/code.hpp"
#include "symcode/designs.hpp"
#include "symcode/graphs.hpp"
#include "symcode/util.hpp"
#include "symcode/words.hpp"

#include <Eigen/Dense>

#include <vector>

namespace symcode::cliques {

// An ordered table of full-weight ternary words (the 888 x 36 codeword
// matrices and their switchings).
struct WordTable {
    int n = 0;
    std::vector<gf3::Word> rows;

    gf3::Matrix to_matrix() const { return gf3::to_matrix(rows, n); }
    static WordTable from_matrix(const gf3::Matrix& m);

    // Rows with the given weight structure (count of 1s, count of 2s).
    std::vector<int> rows_with_structure(int w1, int w2) const;
};

// The lexicographically ordered full-weight codeword table of a code.
WordTable full_weight_table(const gf3::TernaryCode& c);

// Negates (scales by 2) every column in which `row` holds entry 2; that row
// of the result is the all-one vector.
WordTable switch_table(const WordTable& w, int row);

// Distance-18-type graph on a chosen subset of table rows.
struct DistanceGraph {
    std::vector<int> vertex_rows;  // graph vertex -> table row index
    int words = 0;
    std::vector<std::uint64_t> adj;

    int size() const { return static_cast<int>(vertex_rows.size()); }
    bool edge(int u, int v) const {
        return (adj[static_cast<std::size_t>(u) * words + static_cast<std::size_t>(v / 64)] >>
                (v % 64)) & 1u;
    }
};

DistanceGraph distance_graph(const WordTable& t, const std::vector<int>& rows, int distance);

// Graph on the rows of a switched table with first entry 1 and exactly n/2
// entries equal to 1; adjacency = Hamming distance n/2. Its cliques of size
// n-1, completed by the all-one row, are exactly the normalized Hadamard row
// sets inside the table.
DistanceGraph build_gamma(const WordTable& wi);

struct CliqueBudgetExceeded : BudgetExceeded {
    explicit CliqueBudgetExceeded(std::vector<std::vector<int>> found)
        : BudgetExceeded("clique enumeration: budget exceeded"), partial(std::move(found)) {}
    std::vector<std::vector<int>> partial;
};

// All cliques with exactly `target` vertices, as sorted lists of table row
// indices, lexicographically ordered. Branch and bound with a greedy coloring
// bound; `target` doubles as the size cap for pruning.
std::vector<std::vector<int>> enumerate_cliques(const DistanceGraph& g, int target,
                                                const Budget& budget = Budget::unlimited());

// Clique of size n-1 in a switched table + the all-one row -> normalized
// +-1 matrix of order n (first row all-one).
Eigen::MatrixXi clique_to_hadamard(const WordTable& wi, const std::vector<int>& clique_rows);

// All 36-row subsets of the (15,21)-structured rows that form (regular)
// Hadamard matrices, i.e. 36-cliques of the pairwise-distance-18 graph.
std::vector<Eigen::MatrixXi> regular_row_sets(const WordTable& w,
                                              const Budget& budget = Budget::unlimited());

// Automorphism group of the 0/1 incidence structure obtained from the table
// by replacing entries equal to 2 with 0 (acting on rows and columns).
designs::AutGroupSummary table_structure_aut(const WordTable& w,
                                             const Budget& budget = Budget::unlimited());

struct OrbitReduction {
    std::vector<std::vector<int>> orbits;  // partition of the given row subset
    std::vector<int> representatives;      // least row index per orbit
    std::vector<int> lengths;              // orbit sizes, ascending
};

// Orbits of the rows under (row,column)-permutation pairs; generators must
// preserve the table.
OrbitReduction orbit_representatives(const WordTable& w,
                                     const std::vector<std::pair<graphs::Perm, graphs::Perm>>& gens,
                                     const std::vector<int>& row_subset);

}  // namespace symcode::cliques
