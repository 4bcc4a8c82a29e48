#pragma once

#include "symcode/code.hpp"
#include "symcode/gf3.hpp"
#include "symcode/graphs.hpp"

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <utility>

namespace symcode::designs {

// A 0/1 incidence structure, points x blocks, with a lazily cached canonical
// certificate (isomorphism = equal certificates).
class Design {
  public:
    explicit Design(gf3::Matrix incidence);

    int points() const { return static_cast<int>(inc_.rows()); }
    int blocks() const { return static_cast<int>(inc_.cols()); }
    const gf3::Matrix& incidence() const { return inc_; }

    Design complement() const;

    const graphs::CanonicalForm& canonical(const Budget& budget = Budget::unlimited()) const;

    // Point/block bipartite encoding shared by the canonical machinery:
    // vertices [0,v) are points (color 0), [v,v+b) blocks (color 1).
    graphs::ColoredGraph incidence_graph() const;

  private:
    gf3::Matrix inc_;
    mutable std::optional<graphs::CanonicalForm> canon_;
};

// Every row/column sums to k and every pair of distinct rows meets in lambda
// entries (the symmetric 2-design conditions).
bool verify_2design(const Design& d, int v, int k, int lambda);

// Entrywise +1 -> 1, -1 -> 0. The input must be a regular Hadamard matrix
// with negative row sum s; the result is a 2-(n, (n+s)/2, (n+s)/2 - n/4)
// design (2-(36,15,6) at order 36, row sum -6).
Design regular_hadamard_to_design(const Eigen::MatrixXi& h);

// Inverse entrywise map 1 -> +1, 0 -> -1.
Eigen::MatrixXi design_to_pm1(const Design& d);

// Row space of the incidence matrix over GF(3).
gf3::TernaryCode design_code(const Design& d);

struct AutGroupSummary {
    unsigned long long order = 1;
    // element order -> number of elements; computed when the group is small
    // enough to enumerate (identity contributes 1 at order 1).
    std::map<int, long long> element_order_profile;
    // Point and block permutation parts of each generator.
    std::vector<std::pair<graphs::Perm, graphs::Perm>> generators;
};

AutGroupSummary design_aut_group(const Design& d, const Budget& budget = Budget::unlimited(),
                                 std::size_t profile_cap = 1 << 17);

// Point/block bijection carrying d1 onto d2, when one exists.
struct DesignIso {
    graphs::Perm point_map;
    graphs::Perm block_map;
};
std::optional<DesignIso> design_isomorphic(const Design& d1, const Design& d2,
                                           const Budget& budget = Budget::unlimited());

// Monomial transformation between ternary codes: coordinate j of the source
// maps to coordinate coord_perm[j] of the target scaled by scale[j] (1 or 2).
struct CodeMonomialWitness {
    std::vector<int> coord_perm;
    std::vector<gf3::Elem> scale;

    gf3::Vector apply(const gf3::Vector& v) const;
};

// Equivalence via canonical certificates of the incidence system between
// spanning sets of fixed-weight codewords and signed coordinates. A mismatch
// of any monomial invariant short-circuits to non-equivalence.
std::optional<CodeMonomialWitness> code_monomial_equiv(const gf3::TernaryCode& c1,
                                                       const gf3::TernaryCode& c2,
                                                       const Budget& budget = Budget::unlimited());

// Order of the full monomial automorphism group of the code (global scalars
// included), computed on the same word-incidence encoding.
unsigned long long code_monomial_aut_order(const gf3::TernaryCode& c,
                                           const Budget& budget = Budget::unlimited());

}  // namespace symcode::designs
