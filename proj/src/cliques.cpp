#include "symcode/cliques.hpp"

#include "symcode/hadamard.hpp"

#include <algorithm>
#include <bit>

namespace symcode::cliques {

WordTable WordTable::from_matrix(const gf3::Matrix& m) {
    WordTable t;
    t.n = static_cast<int>(m.cols());
    t.rows = gf3::pack_rows(m);
    return t;
}

std::vector<int> WordTable::rows_with_structure(int w1, int w2) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].count_ones() == w1 && rows[i].count_twos() == w2)
            out.push_back(static_cast<int>(i));
    return out;
}

WordTable full_weight_table(const gf3::TernaryCode& c) {
    WordTable t;
    t.n = c.length();
    t.rows = c.codewords_of_weight(c.length());
    return t;
}

WordTable switch_table(const WordTable& w, int row) {
    if (row < 0 || row >= static_cast<int>(w.rows.size()))
        throw std::out_of_range("switch_table: row index out of range");
    const std::uint64_t mask = w.rows[static_cast<std::size_t>(row)].twos;
    WordTable out;
    out.n = w.n;
    out.rows.reserve(w.rows.size());
    for (const gf3::Word& r : w.rows) {
        gf3::Word s;
        s.ones = (r.ones & ~mask) | (r.twos & mask);
        s.twos = (r.twos & ~mask) | (r.ones & mask);
        out.rows.push_back(s);
    }
    return out;
}

DistanceGraph distance_graph(const WordTable& t, const std::vector<int>& rows, int distance) {
    DistanceGraph g;
    g.vertex_rows = rows;
    const int nv = g.size();
    g.words = (nv + 63) / 64;
    g.adj.assign(static_cast<std::size_t>(nv) * g.words, 0);
    for (int u = 0; u < nv; ++u)
        for (int v = u + 1; v < nv; ++v) {
            if (gf3::distance(t.rows[static_cast<std::size_t>(rows[static_cast<std::size_t>(u)])],
                              t.rows[static_cast<std::size_t>(rows[static_cast<std::size_t>(v)])]) ==
                distance) {
                g.adj[static_cast<std::size_t>(u) * g.words + static_cast<std::size_t>(v / 64)] |=
                    std::uint64_t{1} << (v % 64);
                g.adj[static_cast<std::size_t>(v) * g.words + static_cast<std::size_t>(u / 64)] |=
                    std::uint64_t{1} << (u % 64);
            }
        }
    return g;
}

DistanceGraph build_gamma(const WordTable& wi) {
    if (wi.n % 2 != 0) throw std::invalid_argument("build_gamma: even length required");
    bool has_all_one = false;
    for (const gf3::Word& r : wi.rows)
        if (r.count_ones() == wi.n) {
            has_all_one = true;
            break;
        }
    if (!has_all_one) throw std::invalid_argument("build_gamma: table is not a switching (no all-one row)");
    std::vector<int> verts;
    for (std::size_t i = 0; i < wi.rows.size(); ++i)
        if (wi.rows[i].entry(0) == 1 && wi.rows[i].count_ones() == wi.n / 2)
            verts.push_back(static_cast<int>(i));
    return distance_graph(wi, verts, wi.n / 2);
}

namespace {

class CliqueEnumerator {
  public:
    CliqueEnumerator(const DistanceGraph& g, int target, const Budget& budget)
        : g_(g), target_(target), meter_(budget), nv_(g.size()), words_(g.words) {
        // Candidate and loop-set buffers for every recursion depth plus
        // scratch for the coloring bound.
        cand_buf_.assign(static_cast<std::size_t>(target_ + 2) * words_, 0);
        loop_buf_.assign(static_cast<std::size_t>(target_ + 2) * words_, 0);
        tmp_.assign(static_cast<std::size_t>(2) * words_, 0);
    }

    std::vector<std::vector<int>> run() {
        if (target_ <= 0 || nv_ < target_) return {};
        std::uint64_t* root = cand(0);
        for (int v = 0; v < nv_; ++v) root[v / 64] |= std::uint64_t{1} << (v % 64);
        current_.clear();
        expand(0);
        for (auto& c : found_) std::sort(c.begin(), c.end());
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

  private:
    std::uint64_t* cand(int depth) { return cand_buf_.data() + static_cast<std::size_t>(depth) * words_; }
    std::uint64_t* loop(int depth) { return loop_buf_.data() + static_cast<std::size_t>(depth) * words_; }

    static int popcount(const std::uint64_t* s, int words) {
        int c = 0;
        for (int w = 0; w < words; ++w) c += std::popcount(s[w]);
        return c;
    }

    const std::uint64_t* neighbors(int v) const {
        return g_.adj.data() + static_cast<std::size_t>(v) * words_;
    }

    // Greedy coloring of the candidate set; the number of classes bounds the
    // largest clique inside it.
    int color_bound(const std::uint64_t* cand) {
        std::uint64_t* rest = tmp_.data();
        std::uint64_t* cls = tmp_.data() + words_;
        std::copy(cand, cand + words_, rest);
        int colors = 0;
        while (true) {
            int any = 0;
            for (int w = 0; w < words_; ++w) any |= rest[w] != 0;
            if (!any) break;
            ++colors;
            std::copy(rest, rest + words_, cls);
            while (true) {
                int v = -1;
                for (int w = 0; w < words_; ++w)
                    if (cls[w]) {
                        v = w * 64 + std::countr_zero(cls[w]);
                        break;
                    }
                if (v < 0) break;
                rest[v / 64] &= ~(std::uint64_t{1} << (v % 64));
                cls[v / 64] &= ~(std::uint64_t{1} << (v % 64));
                const std::uint64_t* nb = neighbors(v);
                for (int w = 0; w < words_; ++w) cls[w] &= ~nb[w];
            }
        }
        return colors;
    }

    void expand(int depth) {
        if (meter_.spend()) throw CliqueBudgetExceeded(std::move(found_));
        if (static_cast<int>(current_.size()) == target_) {
            std::vector<int> rows;
            rows.reserve(current_.size());
            for (int v : current_) rows.push_back(g_.vertex_rows[static_cast<std::size_t>(v)]);
            found_.push_back(std::move(rows));
            return;
        }
        const std::uint64_t* candidates = cand(depth);
        const int need = target_ - static_cast<int>(current_.size());
        if (popcount(candidates, words_) < need) return;
        if (color_bound(candidates) < need) return;
        std::uint64_t* rest = loop(depth);
        std::copy(candidates, candidates + words_, rest);
        while (true) {
            if (popcount(rest, words_) < need) return;
            int v = -1;
            for (int w = 0; w < words_; ++w)
                if (rest[w]) {
                    v = w * 64 + std::countr_zero(rest[w]);
                    break;
                }
            if (v < 0) return;
            rest[v / 64] &= ~(std::uint64_t{1} << (v % 64));
            // Child candidates: later vertices adjacent to v.
            std::uint64_t* child = cand(depth + 1);
            const std::uint64_t* nb = neighbors(v);
            for (int w = 0; w < words_; ++w) child[w] = rest[w] & nb[w];
            current_.push_back(v);
            expand(depth + 1);
            current_.pop_back();
        }
    }

    const DistanceGraph& g_;
    int target_;
    BudgetMeter meter_;
    int nv_;
    int words_;
    std::vector<std::uint64_t> cand_buf_;
    std::vector<std::uint64_t> loop_buf_;
    std::vector<std::uint64_t> tmp_;
    std::vector<int> current_;
    std::vector<std::vector<int>> found_;
};

}  // namespace

std::vector<std::vector<int>> enumerate_cliques(const DistanceGraph& g, int target,
                                                const Budget& budget) {
    return CliqueEnumerator(g, target, budget).run();
}

Eigen::MatrixXi clique_to_hadamard(const WordTable& wi, const std::vector<int>& clique_rows) {
    if (static_cast<int>(clique_rows.size()) != wi.n - 1)
        throw std::invalid_argument("clique_to_hadamard: clique must have n-1 rows");
    Eigen::MatrixXi h(wi.n, wi.n);
    h.row(0).setOnes();
    for (int i = 0; i < wi.n - 1; ++i)
        h.row(i + 1) = hadamard::word_to_pm1(
            wi.rows[static_cast<std::size_t>(clique_rows[static_cast<std::size_t>(i)])], wi.n);
    return h;
}

std::vector<Eigen::MatrixXi> regular_row_sets(const WordTable& w, const Budget& budget) {
    if (w.n % 4 != 0) return {};
    // Regular rows for the negative row-sum root: (n - s)/2 ones, s = sqrt(n).
    int s = 0;
    while (s * s < w.n) ++s;
    if (s * s != w.n) return {};
    const int ones = (w.n - s) / 2;
    std::vector<int> rows = w.rows_with_structure(ones, w.n - ones);
    if (static_cast<int>(rows.size()) < w.n) return {};
    DistanceGraph g = distance_graph(w, rows, w.n / 2);
    auto cliques = enumerate_cliques(g, w.n, budget);
    std::vector<Eigen::MatrixXi> out;
    out.reserve(cliques.size());
    for (const auto& c : cliques) {
        Eigen::MatrixXi h(w.n, w.n);
        for (int i = 0; i < w.n; ++i)
            h.row(i) = hadamard::word_to_pm1(
                w.rows[static_cast<std::size_t>(c[static_cast<std::size_t>(i)])], w.n);
        out.push_back(std::move(h));
    }
    return out;
}

designs::AutGroupSummary table_structure_aut(const WordTable& w, const Budget& budget) {
    gf3::Matrix b(static_cast<gf3::Index>(w.rows.size()), w.n);
    for (std::size_t i = 0; i < w.rows.size(); ++i)
        for (int j = 0; j < w.n; ++j)
            b(static_cast<gf3::Index>(i), j) = w.rows[i].entry(j) == 1 ? 1 : 0;
    designs::Design d(std::move(b));
    return designs::design_aut_group(d, budget, /*profile_cap=*/0);
}

OrbitReduction orbit_representatives(const WordTable& w,
                                     const std::vector<std::pair<graphs::Perm, graphs::Perm>>& gens,
                                     const std::vector<int>& row_subset) {
    const int nrows = static_cast<int>(w.rows.size());
    std::vector<graphs::Perm> row_perms;
    for (const auto& [rho, sigma] : gens) {
        if (static_cast<int>(rho.size()) != nrows || static_cast<int>(sigma.size()) != w.n)
            throw std::invalid_argument("orbit_representatives: generator degree mismatch");
        for (int r = 0; r < nrows; ++r)
            for (int c = 0; c < w.n; ++c)
                if (w.rows[static_cast<std::size_t>(rho[static_cast<std::size_t>(r)])].entry(
                        sigma[static_cast<std::size_t>(c)]) !=
                    w.rows[static_cast<std::size_t>(r)].entry(c))
                    throw std::invalid_argument("orbit_representatives: generators do not preserve the table");
        row_perms.push_back(rho);
    }
    std::vector<int> rep = graphs::orbits_of(row_perms, nrows);
    OrbitReduction out;
    std::vector<int> reps_seen;
    for (int r : row_subset) {
        int rr = rep[static_cast<std::size_t>(r)];
        auto it = std::find(reps_seen.begin(), reps_seen.end(), rr);
        std::size_t idx;
        if (it == reps_seen.end()) {
            reps_seen.push_back(rr);
            out.orbits.emplace_back();
            idx = out.orbits.size() - 1;
        } else {
            idx = static_cast<std::size_t>(it - reps_seen.begin());
        }
        out.orbits[idx].push_back(r);
    }
    for (auto& orbit : out.orbits) {
        std::sort(orbit.begin(), orbit.end());
        out.representatives.push_back(orbit.front());
        out.lengths.push_back(static_cast<int>(orbit.size()));
    }
    std::sort(out.lengths.begin(), out.lengths.end());
    return out;
}

}  // namespace symcode::cliques
