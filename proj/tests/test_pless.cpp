#include "symcode/pless.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace symcode;
using gf3::Vector;
using gf3::Word;

TEST_CASE("jacobsthal basics at q=5") {
    auto j5 = pless::jacobsthal(5);
    CHECK(j5(0, 1) == 1);  // 1 is a square
    for (int i = 0; i < 5; ++i) CHECK(j5.row(i).sum() == 0);
    CHECK(j5.diagonal().isZero());
}

TEST_CASE("quadratic character is multiplicative at q=17") {
    // Oracle: the set of nonzero squares, enumerated directly.
    std::set<int> squares;
    for (int x = 1; x < 17; ++x) squares.insert(x * x % 17);
    auto chi = [&](int x) { return x % 17 == 0 ? 0 : (squares.count(x % 17) ? 1 : -1); };
    auto j17 = pless::jacobsthal(17);
    // Entry (i,j) is chi(j-i); read chi off the first row.
    for (int x = 1; x < 17; ++x) CHECK(j17(0, x) == chi(x));
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(1, 16);
    for (int t = 0; t < 50; ++t) {
        int x = d(rng), y = d(rng);
        CHECK(chi(x) * chi(y) == chi(x * y % 17));
    }
}

TEST_CASE("jacobsthal rejects non-primes") {
    CHECK_THROWS_AS((void)pless::jacobsthal(9), std::invalid_argument);
    CHECK_THROWS_AS((void)pless::jacobsthal(15), std::invalid_argument);
}

TEST_CASE("conference matrices satisfy C C^T = q I") {
    for (int q : {5, 11, 17}) {
        auto c = pless::conference_matrix(q);
        Eigen::MatrixXi gram = c * c.transpose();
        CHECK(gram == q * Eigen::MatrixXi::Identity(q + 1, q + 1));
    }
    CHECK(pless::conference_matrix(17) == pless::conference_matrix(17).transpose());
    CHECK(pless::conference_matrix(11) == -pless::conference_matrix(11).transpose());
}

TEST_CASE("symmetry codes are self-dual with the known minimum weights") {
    auto c5 = pless::build_symmetry_code(5);
    CHECK(c5.code.length() == 12);
    CHECK(c5.code.dimension() == 6);
    CHECK(c5.code.is_self_dual());
    CHECK(c5.code.min_weight() == 6);

    auto c11 = pless::build_symmetry_code(11);
    CHECK(c11.code.is_self_dual());
    CHECK(c11.code.min_weight() == 9);

    auto c17 = pless::build_symmetry_code(17);
    CHECK(c17.code.length() == 36);
    CHECK(c17.code.dimension() == 18);
    CHECK(c17.code.is_self_dual());
    CHECK(c17.code.dual().same_row_space(c17.code));
    CHECK(c17.code.min_weight() == 12);
}

TEST_CASE("build_symmetry_code rejects invalid q") {
    CHECK_THROWS_AS((void)pless::build_symmetry_code(7), std::invalid_argument);   // 7 = 1 (mod 3)
    CHECK_THROWS_AS((void)pless::build_symmetry_code(25), std::invalid_argument);  // prime power
}

TEST_CASE("the all-one vector enters only after the infinity negation") {
    auto c17 = pless::build_symmetry_code(17);
    Vector ones = Vector::Ones(36);
    CHECK_FALSE(c17.code.contains(ones));

    // The distinguished full-weight codeword: a single 2 in the right-half
    // infinity coordinate, 35 entries equal to 1.
    Vector almost = ones;
    almost(c17.infinity_coordinate) = 2;
    CHECK(c17.code.contains(almost));

    auto l17 = pless::build_l17();
    CHECK(l17.shifted_coordinate == 18);
    CHECK(l17.code.contains(ones));
    CHECK(l17.code.is_self_dual());
}

TEST_CASE("coordinate negation is an involution preserving weights") {
    auto c5 = pless::build_symmetry_code(5).code;
    auto once = pless::negate_coordinate(c5, 3);
    auto twice = pless::negate_coordinate(once, 3);
    CHECK(twice.same_row_space(c5));
    CHECK_FALSE(once.same_row_space(c5));
    CHECK(once.hamming_weight_enumerator() == c5.hamming_weight_enumerator());
}

TEST_CASE("negate_coordinate rejects out-of-range indices") {
    auto c5 = pless::build_symmetry_code(5).code;
    CHECK_THROWS_AS((void)pless::negate_coordinate(c5, 12), std::out_of_range);
}
