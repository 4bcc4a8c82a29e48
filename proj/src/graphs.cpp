#include "symcode/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

namespace symcode::graphs {

Perm identity_perm(int n) {
    Perm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
}

Perm inverse(const Perm& a) {
    Perm inv(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) inv[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
    return inv;
}

bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// PermGroup

void PermGroup::update_level(std::size_t li) {
    Level& lv = levels_[li];
    lv.orbit.assign(1, lv.base_point);
    lv.where.assign(static_cast<std::size_t>(n_), -1);
    lv.where[static_cast<std::size_t>(lv.base_point)] = 0;
    lv.trans.assign(1, identity_perm(n_));
    std::vector<const Perm*> gens;
    for (const Perm& g : gens_) {
        bool ok = true;
        for (std::size_t j = 0; j < li && ok; ++j)
            ok = g[static_cast<std::size_t>(levels_[j].base_point)] == levels_[j].base_point;
        if (ok) gens.push_back(&g);
    }
    for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
        int beta = lv.orbit[head];
        for (const Perm* g : gens) {
            int img = (*g)[static_cast<std::size_t>(beta)];
            if (lv.where[static_cast<std::size_t>(img)] < 0) {
                lv.where[static_cast<std::size_t>(img)] = static_cast<int>(lv.orbit.size());
                lv.orbit.push_back(img);
                lv.trans.push_back(compose(*g, lv.trans[head]));
            }
        }
    }
}

Perm PermGroup::sift(Perm g, std::size_t from) const {
    for (std::size_t li = from; li < levels_.size(); ++li) {
        const Level& lv = levels_[li];
        int img = g[static_cast<std::size_t>(lv.base_point)];
        int w = lv.where[static_cast<std::size_t>(img)];
        if (w < 0) return g;
        g = compose(inverse(lv.trans[static_cast<std::size_t>(w)]), g);
    }
    return g;
}

bool PermGroup::contains(const Perm& g) const {
    if (static_cast<int>(g.size()) != n_) throw std::invalid_argument("PermGroup: degree mismatch");
    return is_identity(sift(g, 0));
}

bool PermGroup::add_generator(const Perm& g) {
    if (static_cast<int>(g.size()) != n_) throw std::invalid_argument("PermGroup: degree mismatch");
    if (contains(g)) return false;
    gens_.push_back(g);
    close();
    return true;
}

// Full Schreier closure: repeat until every Schreier generator sifts to the
// identity. Restarting after each insertion is conservative but simple; the
// groups handled here are tiny by permutation-group standards.
void PermGroup::close() {
    auto deepest_fixed = [&](const Perm& g) {
        std::size_t l = 0;
        while (l < levels_.size() &&
               g[static_cast<std::size_t>(levels_[l].base_point)] == levels_[l].base_point)
            ++l;
        return l;
    };
    auto moved_point = [&](const Perm& g) {
        for (int v = 0; v < n_; ++v)
            if (g[static_cast<std::size_t>(v)] != v) return v;
        return -1;
    };

    for (const Perm& g : gens_) {
        if (is_identity(g)) continue;
        if (deepest_fixed(g) == levels_.size()) {
            Level lv;
            lv.base_point = moved_point(g);
            levels_.push_back(lv);
        }
    }

restart:
    for (std::size_t li = 0; li < levels_.size(); ++li) update_level(li);
    for (std::size_t li = 0; li < levels_.size(); ++li) {
        const Level& lv = levels_[li];
        for (std::size_t oi = 0; oi < lv.orbit.size(); ++oi) {
            for (const Perm& g : gens_) {
                bool at_level = true;
                for (std::size_t j = 0; j < li && at_level; ++j)
                    at_level = g[static_cast<std::size_t>(levels_[j].base_point)] ==
                               levels_[j].base_point;
                if (!at_level) continue;
                int img = g[static_cast<std::size_t>(lv.orbit[oi])];
                const Perm& to = lv.trans[static_cast<std::size_t>(
                    lv.where[static_cast<std::size_t>(img)])];
                Perm schreier = compose(inverse(to), compose(g, lv.trans[oi]));
                Perm residue = sift(std::move(schreier), li + 1);
                if (!is_identity(residue)) {
                    if (deepest_fixed(residue) == levels_.size()) {
                        Level nl;
                        nl.base_point = moved_point(residue);
                        levels_.push_back(nl);
                    }
                    gens_.push_back(std::move(residue));
                    goto restart;
                }
            }
        }
    }
}

unsigned long long PermGroup::order() const {
    unsigned long long o = 1;
    for (const Level& lv : levels_) {
        unsigned long long sz = lv.orbit.size();
        if (o > (std::numeric_limits<unsigned long long>::max)() / sz)
            throw std::overflow_error("PermGroup::order overflow");
        o *= sz;
    }
    return o;
}

std::vector<Perm> PermGroup::elements(std::size_t cap) const {
    std::set<Perm> closed;
    std::deque<Perm> queue;
    closed.insert(identity_perm(n_));
    queue.push_back(identity_perm(n_));
    while (!queue.empty()) {
        Perm cur = std::move(queue.front());
        queue.pop_front();
        for (const Perm& g : gens_) {
            Perm next = compose(g, cur);
            if (closed.insert(next).second) {
                if (closed.size() > cap)
                    throw std::runtime_error("PermGroup::elements: order exceeds cap");
                queue.push_back(std::move(next));
            }
        }
    }
    return {closed.begin(), closed.end()};
}

std::vector<int> PermGroup::orbit_representatives() const { return orbits_of(gens_, n_); }

std::vector<int> orbits_of(const std::vector<Perm>& gens, int n) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;  // keep the smallest as root
    };
    for (const Perm& g : gens)
        for (int v = 0; v < n; ++v) unite(v, g[static_cast<std::size_t>(v)]);
    std::vector<int> rep(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) rep[static_cast<std::size_t>(v)] = find(v);
    return rep;
}

// ---------------------------------------------------------------------------
// ColoredGraph

ColoredGraph::ColoredGraph(int n, std::vector<int> colors)
    : n_(n), words_((n + 63) / 64), adj_(static_cast<std::size_t>(n) * words_, 0),
      colors_(std::move(colors)) {
    if (static_cast<int>(colors_.size()) != n)
        throw std::invalid_argument("ColoredGraph: color count mismatch");
}

void ColoredGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("ColoredGraph: no loops");
    adj_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v / 64)] |=
        std::uint64_t{1} << (v % 64);
    adj_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u / 64)] |=
        std::uint64_t{1} << (u % 64);
}

bool ColoredGraph::has_edge(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v / 64)] >>
            (v % 64)) &
           1u;
}

bool ColoredGraph::is_automorphism(const Perm& p) const {
    if (static_cast<int>(p.size()) != n_) return false;
    for (int v = 0; v < n_; ++v)
        if (colors_[static_cast<std::size_t>(v)] !=
            colors_[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])])
            return false;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v) !=
                has_edge(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]))
                return false;
    return true;
}

// ---------------------------------------------------------------------------
// Canonical labeling

namespace {

struct Partition {
    std::vector<int> lab;     // position -> vertex
    std::vector<int> pos;     // vertex -> position
    std::vector<int> cstart;  // position -> start of its cell
    std::vector<int> csize;   // cell start -> size (valid at starts only)

    int n() const { return static_cast<int>(lab.size()); }
    bool discrete() const {
        for (int i = 0; i < n();) {
            if (csize[static_cast<std::size_t>(i)] != 1) return false;
            ++i;
        }
        return true;
    }
};

constexpr std::uint64_t kHashMul = 1099511628211ull;

inline void mix(std::uint64_t& h, std::uint64_t v) { h = (h ^ v) * kHashMul; }

// The individualization-refinement search. Nodes carry an invariant hash of
// the refinement trace; paths compare lexicographically by those hashes with
// the packed adjacency as tiebreaker, nauty-style: subtrees that are
// incompatible with the first path and already worse than the best path
// cannot contribute automorphisms or a better canonical form.
class Canonizer {
  public:
    Canonizer(const ColoredGraph& g, const Budget& budget)
        : g_(g), meter_(budget), group_(g.size() > 0 ? g.size() : 1) {}

    CanonicalForm run() {
        const int n = g_.size();
        CanonicalForm out;
        if (n == 0) {
            out.group_order = 1;
            return out;
        }
        Partition p = initial_partition();
        std::deque<int> queue;
        for (int i = 0; i < n; i += p.csize[static_cast<std::size_t>(i)]) queue.push_back(i);
        std::uint64_t h = 14695981039346656037ull;
        refine(p, queue, h);
        std::vector<std::uint64_t> path{h};
        (void)search(p, path, true, 0);

        out.labeling = best_lab_;
        out.certificate.reserve(best_path_.size() + best_cert_.size() + 1);
        out.certificate.push_back(static_cast<std::uint64_t>(best_path_.size()));
        out.certificate.insert(out.certificate.end(), best_path_.begin(), best_path_.end());
        out.certificate.insert(out.certificate.end(), best_cert_.begin(), best_cert_.end());
        out.automorphism_generators = auts_;
        out.group_order = group_.order();
        return out;
    }

  private:
    Partition initial_partition() {
        const int n = g_.size();
        Partition p;
        p.lab.resize(static_cast<std::size_t>(n));
        p.pos.resize(static_cast<std::size_t>(n));
        p.cstart.assign(static_cast<std::size_t>(n), 0);
        p.csize.assign(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) p.lab[static_cast<std::size_t>(i)] = i;
        std::stable_sort(p.lab.begin(), p.lab.end(), [&](int a, int b) {
            return g_.colors()[static_cast<std::size_t>(a)] <
                   g_.colors()[static_cast<std::size_t>(b)];
        });
        for (int i = 0; i < n; ++i)
            p.pos[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] = i;
        int start = 0;
        for (int i = 1; i <= n; ++i) {
            if (i == n || g_.colors()[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] !=
                              g_.colors()[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i - 1)])]) {
                for (int j = start; j < i; ++j) p.cstart[static_cast<std::size_t>(j)] = start;
                p.csize[static_cast<std::size_t>(start)] = i - start;
                start = i;
            }
        }
        return p;
    }

    void refine(Partition& p, std::deque<int>& queue, std::uint64_t& hash) {
        const int n = g_.size();
        const int words = g_.words();
        std::vector<std::uint64_t> mask(static_cast<std::size_t>(words));
        std::vector<int> cnt(static_cast<std::size_t>(n));
        while (!queue.empty()) {
            int s = queue.front();
            queue.pop_front();
            int slen = p.csize[static_cast<std::size_t>(s)];
            std::fill(mask.begin(), mask.end(), 0);
            for (int i = s; i < s + slen; ++i) {
                int v = p.lab[static_cast<std::size_t>(i)];
                mask[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
            }
            for (int v = 0; v < n; ++v) {
                const std::uint64_t* row = g_.row(v);
                int c = 0;
                for (int w = 0; w < words; ++w)
                    c += std::popcount(row[w] & mask[static_cast<std::size_t>(w)]);
                cnt[static_cast<std::size_t>(v)] = c;
            }
            for (int cs = 0; cs < n;) {
                int len = p.csize[static_cast<std::size_t>(cs)];
                if (len > 1) split_cell(p, cs, len, cnt, queue, hash);
                cs += len;
            }
        }
    }

    void split_cell(Partition& p, int cs, int len, const std::vector<int>& cnt,
                    std::deque<int>& queue, std::uint64_t& hash) {
        int first = cnt[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(cs)])];
        bool uniform = true;
        for (int i = cs + 1; i < cs + len && uniform; ++i)
            uniform = cnt[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] == first;
        if (uniform) return;
        std::vector<int> cell(p.lab.begin() + cs, p.lab.begin() + cs + len);
        std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) {
            return cnt[static_cast<std::size_t>(a)] < cnt[static_cast<std::size_t>(b)];
        });
        for (int i = 0; i < len; ++i) {
            p.lab[static_cast<std::size_t>(cs + i)] = cell[static_cast<std::size_t>(i)];
            p.pos[static_cast<std::size_t>(cell[static_cast<std::size_t>(i)])] = cs + i;
        }
        mix(hash, static_cast<std::uint64_t>(cs) + 0x9e3779b9u);
        int frag = cs;
        for (int i = cs + 1; i <= cs + len; ++i) {
            if (i == cs + len ||
                cnt[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i)])] !=
                    cnt[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(i - 1)])]) {
                for (int j = frag; j < i; ++j) p.cstart[static_cast<std::size_t>(j)] = frag;
                p.csize[static_cast<std::size_t>(frag)] = i - frag;
                mix(hash, static_cast<std::uint64_t>(i - frag));
                mix(hash, static_cast<std::uint64_t>(
                              cnt[static_cast<std::size_t>(p.lab[static_cast<std::size_t>(frag)])]));
                queue.push_back(frag);
                frag = i;
            }
        }
    }

    int target_cell(const Partition& p) const {
        int best = -1, best_len = g_.size() + 1;
        for (int cs = 0; cs < g_.size();) {
            int len = p.csize[static_cast<std::size_t>(cs)];
            if (len > 1 && len < best_len) {
                best = cs;
                best_len = len;
            }
            cs += len;
        }
        return best;
    }

    // first_ok: the path hashes so far agree with the first leaf's path.
    // best_rel: -1/0/+1 = path so far compares below / equal to / above the
    // best path recorded when the node was entered (stale +1 stays valid
    // because the best path only ever decreases). Returns the depth to
    // backjump to after an automorphism discovery (INT_MAX = none).
    int search(const Partition& p, std::vector<std::uint64_t>& path, bool first_ok,
               int best_rel) {
        if (meter_.spend()) throw BudgetExceeded("canonize: budget exceeded");
        if (p.discrete()) return handle_leaf(p, path);
        const int depth = static_cast<int>(base_stack_.size());
        int s = target_cell(p);
        int len = p.csize[static_cast<std::size_t>(s)];
        std::vector<int> cand(p.lab.begin() + s, p.lab.begin() + s + len);
        std::sort(cand.begin(), cand.end());
        std::vector<char> skip(static_cast<std::size_t>(g_.size()), 0);
        for (int v : cand) {
            if (skip[static_cast<std::size_t>(v)]) continue;
            mark_orbit(v, skip);
            Partition child = p;
            std::uint64_t h = path.back();
            mix(h, static_cast<std::uint64_t>(s) * 0x517cc1b727220a95ull);
            individualize(child, s, v, h);

            bool child_first_ok = first_ok;
            int child_rel = best_rel;
            std::size_t pdepth = path.size();
            if (!first_path_.empty()) {
                child_first_ok = first_ok && pdepth < first_path_.size() &&
                                 h == first_path_[pdepth];
                if (child_rel == 0) {
                    if (pdepth >= best_path_.size())
                        child_rel = 1;
                    else if (h != best_path_[pdepth])
                        child_rel = h < best_path_[pdepth] ? -1 : 1;
                }
                if (!child_first_ok && child_rel > 0) continue;
            }
            path.push_back(h);
            base_stack_.push_back(v);
            int jump = search(child, path, child_first_ok, child_rel);
            base_stack_.pop_back();
            path.pop_back();
            // A discovered automorphism makes the remaining subtrees between
            // the fork level and here redundant.
            if (jump < depth) return jump;
        }
        return (std::numeric_limits<int>::max)();
    }

    void mark_orbit(int v, std::vector<char>& skip) {
        std::vector<Perm> fixing;
        for (const Perm& a : auts_) {
            bool ok = true;
            for (int b : base_stack_)
                if (a[static_cast<std::size_t>(b)] != b) {
                    ok = false;
                    break;
                }
            if (ok) fixing.push_back(a);
        }
        if (fixing.empty()) {
            skip[static_cast<std::size_t>(v)] = 1;
            return;
        }
        std::vector<int> rep = orbits_of(fixing, g_.size());
        int rv = rep[static_cast<std::size_t>(v)];
        for (int u = 0; u < g_.size(); ++u)
            if (rep[static_cast<std::size_t>(u)] == rv) skip[static_cast<std::size_t>(u)] = 1;
    }

    void individualize(Partition& p, int s, int v, std::uint64_t& hash) {
        int pv = p.pos[static_cast<std::size_t>(v)];
        int other = p.lab[static_cast<std::size_t>(s)];
        std::swap(p.lab[static_cast<std::size_t>(s)], p.lab[static_cast<std::size_t>(pv)]);
        p.pos[static_cast<std::size_t>(v)] = s;
        p.pos[static_cast<std::size_t>(other)] = pv;
        int len = p.csize[static_cast<std::size_t>(s)];
        p.csize[static_cast<std::size_t>(s)] = 1;
        p.cstart[static_cast<std::size_t>(s)] = s;
        p.csize[static_cast<std::size_t>(s + 1)] = len - 1;
        for (int j = s + 1; j < s + len; ++j) p.cstart[static_cast<std::size_t>(j)] = s + 1;
        std::deque<int> queue{s, s + 1};
        refine(p, queue, hash);
    }

    std::vector<std::uint64_t> make_certificate(const Perm& lab) const {
        const int n = g_.size();
        std::vector<std::uint64_t> cert;
        cert.reserve(static_cast<std::size_t>(n) +
                     (static_cast<std::size_t>(n) * n / 2) / 64 + 2);
        for (int i = 0; i < n; ++i)
            cert.push_back(static_cast<std::uint64_t>(
                g_.colors()[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])]));
        std::uint64_t acc = 0;
        int nb = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                acc = (acc << 1) |
                      static_cast<std::uint64_t>(g_.has_edge(lab[static_cast<std::size_t>(i)],
                                                             lab[static_cast<std::size_t>(j)]));
                if (++nb == 64) {
                    cert.push_back(acc);
                    acc = 0;
                    nb = 0;
                }
            }
        if (nb) cert.push_back(acc << (64 - nb));
        return cert;
    }

    static int fork_level(const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t i = 0;
        while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
        return static_cast<int>(i);
    }

    int handle_leaf(const Partition& p, const std::vector<std::uint64_t>& path) {
        constexpr int kNoJump = (std::numeric_limits<int>::max)();
        std::vector<std::uint64_t> cert = make_certificate(p.lab);
        if (first_path_.empty()) {
            first_path_ = path;
            first_cert_ = cert;
            first_lab_ = p.lab;
            first_base_ = base_stack_;
            best_path_ = path;
            best_cert_ = std::move(cert);
            best_lab_ = p.lab;
            best_base_ = base_stack_;
            return kNoJump;
        }
        if (path == first_path_ && cert == first_cert_) {
            record_automorphism(first_lab_, p.lab);
            return fork_level(base_stack_, first_base_);
        }
        if (path == best_path_ && cert == best_cert_) {
            record_automorphism(best_lab_, p.lab);
            return fork_level(base_stack_, best_base_);
        }
        if (std::tie(path, cert) < std::tie(best_path_, best_cert_)) {
            best_path_ = path;
            best_cert_ = std::move(cert);
            best_lab_ = p.lab;
            best_base_ = base_stack_;
        }
        return kNoJump;
    }

    void record_automorphism(const Perm& ref_lab, const Perm& leaf_lab) {
        Perm a(static_cast<std::size_t>(g_.size()));
        for (int i = 0; i < g_.size(); ++i)
            a[static_cast<std::size_t>(ref_lab[static_cast<std::size_t>(i)])] =
                leaf_lab[static_cast<std::size_t>(i)];
        assert(g_.is_automorphism(a));
        if (group_.add_generator(a)) auts_.push_back(std::move(a));
    }

    const ColoredGraph& g_;
    BudgetMeter meter_;
    PermGroup group_;
    std::vector<Perm> auts_;
    std::vector<int> base_stack_;
    Perm first_lab_;
    std::vector<std::uint64_t> first_path_;
    std::vector<std::uint64_t> first_cert_;
    std::vector<int> first_base_;
    Perm best_lab_;
    std::vector<std::uint64_t> best_path_;
    std::vector<std::uint64_t> best_cert_;
    std::vector<int> best_base_;
};

}  // namespace

CanonicalForm canonize(const ColoredGraph& g, const Budget& budget) {
    return Canonizer(g, budget).run();
}

std::optional<Perm> isomorphism_from_canonical(const CanonicalForm& a, const CanonicalForm& b) {
    if (a.certificate != b.certificate) return std::nullopt;
    if (a.labeling.empty()) return Perm{};
    return compose(b.labeling, inverse(a.labeling));
}

}  // namespace symcode::graphs
