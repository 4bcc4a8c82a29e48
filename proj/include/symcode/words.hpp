#pragma once

#include "symcode/gf3.hpp"

#include <bit>
#include <cstdint>
#include <vector>

// Bit-packed ternary words of length <= 64: one bitplane for the positions
// holding 1 and one for the positions holding 2. All the enumeration-heavy
// code (codeword sweeps, distance graphs, switchings) runs on this
// representation; conversion to Eigen rows happens at module boundaries.

namespace symcode::gf3 {

struct Word {
    std::uint64_t ones = 0;
    std::uint64_t twos = 0;

    friend bool operator==(const Word&, const Word&) = default;

    Elem entry(int j) const {
        return static_cast<Elem>(((ones >> j) & 1u) + 2 * ((twos >> j) & 1u));
    }
    void set(int j, Elem v) {
        const std::uint64_t bit = std::uint64_t{1} << j;
        ones &= ~bit;
        twos &= ~bit;
        if (v == 1) ones |= bit;
        if (v == 2) twos |= bit;
    }

    int weight() const { return std::popcount(ones) + std::popcount(twos); }
    int count_ones() const { return std::popcount(ones); }
    int count_twos() const { return std::popcount(twos); }

    Word negated() const { return {twos, ones}; }
    bool is_zero() const { return ones == 0 && twos == 0; }
};

// Entrywise sum over GF(3), branch-free on the two bitplanes.
inline Word add(const Word& a, const Word& b) {
    const std::uint64_t bz = ~(b.ones | b.twos);
    const std::uint64_t az = ~(a.ones | a.twos);
    Word s;
    s.ones = (a.ones & bz) | (b.ones & az) | (a.twos & b.twos);
    s.twos = (a.twos & bz) | (b.twos & az) | (a.ones & b.ones);
    return s;
}

inline int distance(const Word& a, const Word& b) {
    return std::popcount((a.ones ^ b.ones) | (a.twos ^ b.twos));
}

// Lexicographic comparison of the entry sequences (0 < 1 < 2), position 0
// most significant.
inline bool lex_less(const Word& a, const Word& b, int n) {
    for (int j = 0; j < n; ++j) {
        Elem x = a.entry(j), y = b.entry(j);
        if (x != y) return x < y;
    }
    return false;
}

inline Word pack(const Vector& v) {
    if (v.cols() > 64) throw std::invalid_argument("gf3::pack: length > 64");
    Word w;
    for (Index j = 0; j < v.cols(); ++j) w.set(static_cast<int>(j), v(j));
    return w;
}

inline Vector unpack(const Word& w, int n) {
    Vector v(n);
    for (int j = 0; j < n; ++j) v(j) = w.entry(j);
    return v;
}

inline Matrix to_matrix(const std::vector<Word>& rows, int n) {
    Matrix m(static_cast<Index>(rows.size()), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < n; ++j) m(static_cast<Index>(i), j) = rows[i].entry(j);
    return m;
}

inline std::vector<Word> pack_rows(const Matrix& m) {
    std::vector<Word> rows(static_cast<std::size_t>(m.rows()));
    for (Index i = 0; i < m.rows(); ++i) rows[static_cast<std::size_t>(i)] = pack(m.row(i));
    return rows;
}

}  // namespace symcode::gf3
