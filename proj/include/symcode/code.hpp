#pragma once

#include "symcode/gf3.hpp"
#include "symcode/util.hpp"
#include "symcode/words.hpp"

#include <map>
#include <optional>
#include <vector>

namespace symcode::gf3 {

// Joint distribution of (#entries equal to 1, #entries equal to 2) over a set
// of ternary words.
struct CompleteWeightEnumerator {
    std::map<std::pair<int, int>, long long> counts;

    long long total() const {
        long long t = 0;
        for (auto& [k, v] : counts) t += v;
        return t;
    }
    friend bool operator==(const CompleteWeightEnumerator&,
                           const CompleteWeightEnumerator&) = default;
};

CompleteWeightEnumerator complete_weight_distribution(const std::vector<Word>& rows);

// Thrown by min_weight when the budget runs out; carries the best upper bound
// established so far.
struct MinWeightTimeout : BudgetExceeded {
    explicit MinWeightTimeout(int upper)
        : BudgetExceeded("min_weight: budget exceeded, best upper bound " +
                         std::to_string(upper)),
          best_upper(upper) {}
    int best_upper;
};

// A linear code over GF(3), held by a canonical (RREF) generator matrix.
// Codeword enumeration requires length <= 64 and dimension <= 20.
class TernaryCode {
  public:
    explicit TernaryCode(const Matrix& generator_rows);

    static TernaryCode zero_code(int length);

    int length() const { return n_; }
    int dimension() const { return k_; }

    // Canonical basis: the unique RREF of any generating set of the row space.
    const Matrix& generator() const { return gen_; }

    bool contains(const Vector& v) const;
    bool contains(const Word& w) const { return contains(unpack(w, n_)); }
    bool same_row_space(const TernaryCode& other) const;

    TernaryCode dual() const;
    bool is_self_dual() const;
    TernaryCode with_negated_coordinate(int j) const;

    // Exact minimum nonzero weight via enumeration over disjoint information
    // sets with accumulating lower bounds. Requires dimension >= 1.
    int min_weight(const Budget& budget = Budget::unlimited()) const;

    // Visits all 3^k codewords (zero word included) in base-3 odometer order
    // of the message vector; generator rows are the canonical basis.
    template <typename F>
    void for_each_codeword(F&& visit) const {
        check_enumerable();
        std::vector<Word> rows = pack_rows(gen_);
        std::vector<Elem> digit(static_cast<std::size_t>(k_), 0);
        Word cur;
        for (;;) {
            visit(static_cast<const Word&>(cur));
            int i = 0;
            while (i < k_) {
                cur = add(cur, rows[static_cast<std::size_t>(i)]);
                if (digit[static_cast<std::size_t>(i)] != 2) {
                    ++digit[static_cast<std::size_t>(i)];
                    break;
                }
                digit[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            if (i == k_) return;
        }
    }

    // All codewords of exactly the given weight, in lexicographic order of
    // their entry sequences (0 < 1 < 2).
    std::vector<Word> codewords_of_weight(int w) const;

    const CompleteWeightEnumerator& complete_weight_distribution() const;
    std::vector<long long> hamming_weight_enumerator() const;

  private:
    void check_enumerable() const;

    int n_ = 0;
    int k_ = 0;
    Matrix gen_;
    mutable std::optional<CompleteWeightEnumerator> cwe_;
};

// Rank of the matrix whose rows are the given words.
int span_rank(const std::vector<Word>& rows, int n);

}  // namespace symcode::gf3
