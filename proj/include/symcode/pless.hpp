#pragma once

#include "symcode/code.hpp"
#include "symcode/gf3.hpp"

#include <Eigen/Dense>

namespace symcode::pless {

// Quadratic-character matrix of an odd prime q: entry (i,j) = chi(j-i) with
// chi(0) = 0, chi(x) = +-1 by residuosity. Entries over the integers.
Eigen::MatrixXi jacobsthal(int q);

// Paley conference matrix of order q+1, rows/columns labeled oo,0,...,q-1.
// Symmetric for q = 1 (mod 4), skew for q = 3 (mod 4); C C^T = q I.
Eigen::MatrixXi conference_matrix(int q);

// The [2q+2, q+1] self-dual ternary symmetry code, generator (I | S) with S
// the conference matrix taken mod 3. Coordinates: left half oo,0,...,q-1
// (identity block), right half oo,0,...,q-1 (S block). Requires an odd prime
// q = 2 (mod 3).
struct SymmetryCode {
    int q;
    gf3::TernaryCode code;
    // Index of the right-half infinity coordinate (= q+1); negating this
    // coordinate is what maps the one-nonunit full-weight codeword to the
    // all-one vector.
    int infinity_coordinate;
};

SymmetryCode build_symmetry_code(int q);

// Coordinate negation (column scaled by 2); a monomial equivalence, so the
// Hamming weight enumerator is unchanged.
gf3::TernaryCode negate_coordinate(const gf3::TernaryCode& c, int j);

// The monomial shift of the q=17 symmetry code that contains the all-one
// vector: the right-half infinity coordinate is negated. `shifted_coordinate`
// records which column was rescaled.
struct ShiftedCode {
    gf3::TernaryCode code;
    int shifted_coordinate;
};

ShiftedCode build_l17();

bool is_odd_prime(int q);

}  // namespace symcode::pless
