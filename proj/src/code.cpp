#include "symcode/code.hpp"

#include <algorithm>
#include <numeric>

namespace symcode::gf3 {

CompleteWeightEnumerator complete_weight_distribution(const std::vector<Word>& rows) {
    CompleteWeightEnumerator cwe;
    for (const Word& w : rows) ++cwe.counts[{w.count_ones(), w.count_twos()}];
    return cwe;
}

TernaryCode::TernaryCode(const Matrix& generator_rows) {
    if (!valid(generator_rows)) throw std::invalid_argument("TernaryCode: entries must be 0/1/2");
    n_ = static_cast<int>(generator_rows.cols());
    auto [r, rk] = rref(generator_rows);
    k_ = rk;
    gen_ = r.topRows(rk);
}

TernaryCode TernaryCode::zero_code(int length) {
    Matrix empty(0, length);
    return TernaryCode(empty);
}

bool TernaryCode::contains(const Vector& v) const {
    if (v.cols() != n_) throw std::invalid_argument("TernaryCode::contains: length mismatch");
    return in_row_space(gen_, v);
}

bool TernaryCode::same_row_space(const TernaryCode& other) const {
    return n_ == other.n_ && k_ == other.k_ && gen_ == other.gen_;
}

TernaryCode TernaryCode::dual() const { return TernaryCode(null_space_rows(gen_)); }

bool TernaryCode::is_self_dual() const {
    if (n_ != 2 * k_) return false;
    if (k_ == 0) return true;
    Matrix gram = matmul(gen_, Matrix(gen_.transpose()));
    return (gram.array() == 0).all();
}

TernaryCode TernaryCode::with_negated_coordinate(int j) const {
    if (j < 0 || j >= n_) throw std::out_of_range("negate_coordinate: index out of range");
    Matrix g = gen_;
    negate_column(g, j);
    return TernaryCode(g);
}

void TernaryCode::check_enumerable() const {
    if (n_ > 64) throw std::invalid_argument("codeword enumeration requires length <= 64");
    if (k_ > 20) throw std::invalid_argument("codeword enumeration requires dimension <= 20");
}

namespace {

struct InfoSet {
    std::vector<Word> rows;  // k generator rows, systematic on the pivot columns
    int defect = 0;          // k - rank on this column set
};

// Greedy disjoint information sets: repeatedly run elimination with pivots
// restricted to columns not used by earlier sets.
std::vector<InfoSet> disjoint_information_sets(const Matrix& gen) {
    const Index k = gen.rows(), n = gen.cols();
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::vector<InfoSet> sets;
    Index columns_left = n;
    while (columns_left > 0) {
        Matrix m = gen;
        std::vector<Index> pivots;
        Index pr = 0;
        for (Index pc = 0; pc < n && pr < k; ++pc) {
            if (used[static_cast<std::size_t>(pc)]) continue;
            Index pivot = -1;
            for (Index r = pr; r < k; ++r)
                if (m(r, pc) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            if (pivot != pr) m.row(pivot).swap(m.row(pr));
            if (m(pr, pc) == 2)
                for (Index c = 0; c < n; ++c) m(pr, c) = mul(m(pr, c), 2);
            for (Index r = 0; r < k; ++r) {
                if (r == pr) continue;
                Elem f = m(r, pc);
                if (f == 0) continue;
                for (Index c = 0; c < n; ++c) m(r, c) = sub(m(r, c), mul(f, m(pr, c)));
            }
            pivots.push_back(pc);
            ++pr;
        }
        if (pivots.empty()) break;
        for (Index c : pivots) used[static_cast<std::size_t>(c)] = true;
        columns_left -= static_cast<Index>(pivots.size());
        InfoSet s;
        s.rows = pack_rows(m);
        s.defect = static_cast<int>(k - pr);
        sets.push_back(std::move(s));
    }
    return sets;
}

// Enumerates sums of exactly `r` generator rows with coefficients in {1,2},
// first coefficient normalized to 1 (a codeword and its negative have the
// same weight). Returns false when the budget fires.
bool enumerate_radius(const std::vector<Word>& rows, int r, int& best, BudgetMeter& meter) {
    const int k = static_cast<int>(rows.size());
    struct Frame {
        Word sum;
        int next;
        int depth;
    };
    std::vector<Frame> stack;
    for (int i = 0; i + r <= k; ++i) stack.push_back({rows[static_cast<std::size_t>(i)], i + 1, 1});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.depth == r) {
            if (meter.spend()) return false;
            int w = f.sum.weight();
            if (w > 0 && w < best) best = w;
            continue;
        }
        for (int i = f.next; i + (r - f.depth) <= k; ++i) {
            const Word& g = rows[static_cast<std::size_t>(i)];
            stack.push_back({add(f.sum, g), i + 1, f.depth + 1});
            stack.push_back({add(f.sum, g.negated()), i + 1, f.depth + 1});
        }
    }
    return true;
}

}  // namespace

int TernaryCode::min_weight(const Budget& budget) const {
    if (k_ < 1) throw std::invalid_argument("min_weight: dimension must be >= 1");
    if (n_ > 64) throw std::invalid_argument("min_weight: length <= 64 required");
    BudgetMeter meter(budget);
    auto sets = disjoint_information_sets(gen_);

    int best = n_ + 1;
    for (const auto& s : sets)
        for (const Word& row : s.rows) best = std::min(best, row.weight());

    for (int r = 1; r <= k_; ++r) {
        for (const auto& s : sets)
            if (!enumerate_radius(s.rows, r, best, meter)) throw MinWeightTimeout(best);
        long long lower = 0;
        for (const auto& s : sets) lower += std::max(0, r + 1 - s.defect);
        if (lower >= best) return best;
    }
    return best;
}

std::vector<Word> TernaryCode::codewords_of_weight(int w) const {
    if (w < 0 || w > n_) throw std::invalid_argument("codewords_of_weight: weight out of range");
    std::vector<Word> out;
    for_each_codeword([&](const Word& c) {
        if (c.weight() == w) out.push_back(c);
    });
    const int n = n_;
    std::sort(out.begin(), out.end(),
              [n](const Word& a, const Word& b) { return lex_less(a, b, n); });
    return out;
}

const CompleteWeightEnumerator& TernaryCode::complete_weight_distribution() const {
    if (!cwe_) {
        // Flat tally; the map is built once at the end (3^k words pass here).
        const int stride = n_ + 1;
        std::vector<long long> flat(static_cast<std::size_t>(stride) * stride, 0);
        for_each_codeword([&](const Word& c) {
            ++flat[static_cast<std::size_t>(c.count_ones() * stride + c.count_twos())];
        });
        CompleteWeightEnumerator cwe;
        for (int w1 = 0; w1 <= n_; ++w1)
            for (int w2 = 0; w2 <= n_; ++w2) {
                long long v = flat[static_cast<std::size_t>(w1 * stride + w2)];
                if (v) cwe.counts[{w1, w2}] = v;
            }
        cwe_ = std::move(cwe);
    }
    return *cwe_;
}

std::vector<long long> TernaryCode::hamming_weight_enumerator() const {
    std::vector<long long> we(static_cast<std::size_t>(n_) + 1, 0);
    for (auto& [pair, count] : complete_weight_distribution().counts)
        we[static_cast<std::size_t>(pair.first + pair.second)] += count;
    return we;
}

int span_rank(const std::vector<Word>& rows, int n) {
    if (rows.empty()) throw std::invalid_argument("span_rank: empty set");
    return rank(to_matrix(rows, n));
}

}  // namespace symcode::gf3
