#include "symcode/code.hpp"
#include "symcode/gf3.hpp"
#include "symcode/io.hpp"
#include "symcode/words.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace symcode;
using gf3::Matrix;
using gf3::TernaryCode;
using gf3::Vector;
using gf3::Word;

namespace {

Matrix random_matrix(int rows, int cols, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, 2);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = static_cast<gf3::Elem>(d(rng));
    return m;
}

// Integer determinant by cofactor expansion, reduced mod 3. Oracle use only.
int det_mod3(const Matrix& m) {
    const int n = static_cast<int>(m.rows());
    if (n == 1) return m(0, 0) % 3;
    int det = 0;
    Matrix minor(n - 1, n - 1);
    for (int col = 0; col < n; ++col) {
        if (m(0, col) != 0) {
            for (int i = 1; i < n; ++i) {
                int mc = 0;
                for (int j = 0; j < n; ++j)
                    if (j != col) minor(i - 1, mc++) = m(i, j);
            }
            int sign = (col % 2 == 0) ? 1 : 2;
            det = (det + sign * m(0, col) * det_mod3(minor)) % 3;
        }
    }
    return det % 3;
}

// Rank as the largest r with a nonvanishing r x r minor.
int minor_rank_oracle(const Matrix& m) {
    const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
    for (int r = std::min(rows, cols); r >= 1; --r) {
        std::vector<int> rsel(rows), csel(cols);
        std::iota(rsel.begin(), rsel.end(), 0);
        std::iota(csel.begin(), csel.end(), 0);
        std::vector<bool> rmask(static_cast<std::size_t>(rows), false);
        std::fill(rmask.begin(), rmask.begin() + r, true);
        do {
            std::vector<bool> cmask(static_cast<std::size_t>(cols), false);
            std::fill(cmask.begin(), cmask.begin() + r, true);
            do {
                Matrix sub(r, r);
                int si = 0;
                for (int i = 0; i < rows; ++i) {
                    if (!rmask[static_cast<std::size_t>(i)]) continue;
                    int sj = 0;
                    for (int j = 0; j < cols; ++j)
                        if (cmask[static_cast<std::size_t>(j)]) sub(si, sj++) = m(i, j);
                    ++si;
                }
                if (det_mod3(sub) != 0) return r;
            } while (std::prev_permutation(cmask.begin(), cmask.end()));
        } while (std::prev_permutation(rmask.begin(), rmask.end()));
    }
    return 0;
}

Matrix appendix_matrix() {
    return io::read_gf3_matrix(std::filesystem::path(SYMCODE_DATA_DIR) / "design_36_15_6.txt");
}

}  // namespace

TEST_CASE("rref rank on identity") {
    Matrix id = Matrix::Identity(2, 2);
    CHECK(gf3::rank(id) == 2);
}

TEST_CASE("rref rank of the bundled 36x36 design matrix is 18") {
    CHECK(gf3::rank(appendix_matrix()) == 18);
}

TEST_CASE("rref rank agrees with the determinant-minor oracle") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = random_matrix(5, 7, rng);
        CHECK(gf3::rank(m) == minor_rank_oracle(m));
    }
}

TEST_CASE("rref is idempotent and rank is permutation invariant") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = random_matrix(6, 9, rng);
        auto [r1, rk1] = gf3::rref(m);
        auto [r2, rk2] = gf3::rref(r1);
        CHECK(r1 == r2);
        CHECK(rk1 == rk2);

        std::vector<int> rp(6), cp(9);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        Matrix shuffled(6, 9);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 9; ++j) shuffled(i, j) = m(rp[i], cp[j]);
        CHECK(gf3::rank(shuffled) == rk1);
    }
}

TEST_CASE("dual of the whole space is the zero code") {
    TernaryCode whole(Matrix::Identity(3, 3));
    TernaryCode d = whole.dual();
    CHECK(d.dimension() == 0);
    CHECK(d.length() == 3);
}

TEST_CASE("dual of a random [7,3] code, exhaustive orthogonality oracle") {
    std::mt19937 rng(23);
    Matrix g = random_matrix(3, 7, rng);
    TernaryCode c(g);
    TernaryCode d = c.dual();
    CHECK(c.dimension() + d.dimension() == 7);
    c.for_each_codeword([&](const Word& u) {
        d.for_each_codeword([&](const Word& v) {
            CHECK(gf3::dot(gf3::unpack(u, 7), gf3::unpack(v, 7)) == 0);
        });
    });
}

TEST_CASE("the length-2 code spanned by (1,1) is not self-dual") {
    Matrix g(1, 2);
    g << 1, 1;
    // (1,1).(1,1) = 2 over GF(3), so the code is not even self-orthogonal.
    CHECK_FALSE(TernaryCode(g).is_self_dual());
}

TEST_CASE("the zero-length zero code is self-dual") {
    CHECK(TernaryCode::zero_code(0).is_self_dual());
}

TEST_CASE("min_weight of the repetition span is the length") {
    Matrix g(1, 36);
    g.setOnes();
    CHECK(TernaryCode(g).min_weight() == 36);
}

TEST_CASE("min_weight requires a nonzero dimension") {
    CHECK_THROWS_AS((void)TernaryCode::zero_code(4).min_weight(), std::invalid_argument);
}

TEST_CASE("min_weight matches exhaustive enumeration on random [12,6] codes") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix g = random_matrix(6, 12, rng);
        TernaryCode c(g);
        if (c.dimension() == 0) continue;
        int exhaustive = 13;
        c.for_each_codeword([&](const Word& w) {
            int wt = w.weight();
            if (wt > 0) exhaustive = std::min(exhaustive, wt);
        });
        CHECK(c.min_weight() == exhaustive);
    }
}

TEST_CASE("min_weight reports a timeout carrying its best bound") {
    Matrix g = Matrix::Identity(12, 12);
    TernaryCode c(g);
    try {
        (void)c.min_weight(Budget::steps(1));
        // A budget of one step may still suffice on tiny codes; nothing to check then.
    } catch (const gf3::MinWeightTimeout& t) {
        CHECK(t.best_upper >= 1);
        CHECK(t.best_upper <= 12);
    }
}

TEST_CASE("complete weight distribution of the single all-one word") {
    std::vector<Word> rows{gf3::pack(Vector::Ones(36))};
    auto cwe = gf3::complete_weight_distribution(rows);
    CHECK(cwe.counts.size() == 1);
    CHECK(cwe.counts.at({36, 0}) == 1);
}

TEST_CASE("complete weight distribution of a code: symmetry and total") {
    std::mt19937 rng(41);
    Matrix g = random_matrix(4, 9, rng);
    TernaryCode c(g);
    auto cwe = c.complete_weight_distribution();
    long long expected_total = 1;
    for (int i = 0; i < c.dimension(); ++i) expected_total *= 3;
    CHECK(cwe.total() == expected_total);
    for (auto& [pair, count] : cwe.counts)
        CHECK(cwe.counts.at({pair.second, pair.first}) == count);
}

TEST_CASE("codewords_of_weight: zero weight gives the zero word") {
    std::mt19937 rng(43);
    TernaryCode c(random_matrix(3, 8, rng));
    auto words = c.codewords_of_weight(0);
    REQUIRE(words.size() == 1);
    CHECK(words[0].is_zero());
}

TEST_CASE("codewords_of_weight matches the exhaustive filter on a [6,3] code") {
    Matrix g(3, 6);
    g << 1, 0, 0, 1, 1, 0,
         0, 1, 0, 2, 0, 1,
         0, 0, 1, 0, 1, 1;
    TernaryCode c(g);
    std::vector<Word> oracle;
    c.for_each_codeword([&](const Word& w) {
        if (w.weight() == 4) oracle.push_back(w);
    });
    std::sort(oracle.begin(), oracle.end(),
              [](const Word& a, const Word& b) { return gf3::lex_less(a, b, 6); });
    CHECK(c.codewords_of_weight(4) == oracle);
}

TEST_CASE("span_rank of a single nonzero row is 1") {
    Vector v(5);
    v << 0, 1, 2, 0, 1;
    CHECK(gf3::span_rank({gf3::pack(v)}, 5) == 1);
}

TEST_CASE("span_rank of the bundled design rows is 18") {
    Matrix a = appendix_matrix();
    CHECK(gf3::span_rank(gf3::pack_rows(a), 36) == 18);
}

TEST_CASE("matrix text round-trips through the reader and writer") {
    std::mt19937 rng(53);
    Matrix m = random_matrix(7, 5, rng);
    std::ostringstream out;
    io::write_gf3_matrix(out, m);
    std::istringstream in(out.str());
    CHECK(io::read_gf3_matrix(in) == m);

    std::ostringstream again;
    io::write_gf3_matrix(again, m);
    CHECK(again.str() == out.str());
}
