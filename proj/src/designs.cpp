#include "symcode/designs.hpp"

#include "symcode/words.hpp"

#include <algorithm>
#include <numeric>

namespace symcode::designs {

Design::Design(gf3::Matrix incidence) : inc_(std::move(incidence)) {
    if (!((inc_.array() == 0) || (inc_.array() == 1)).all())
        throw std::invalid_argument("Design: incidence entries must be 0/1");
}

Design Design::complement() const {
    gf3::Matrix c = inc_.unaryExpr([](gf3::Elem x) { return static_cast<gf3::Elem>(1 - x); });
    return Design(std::move(c));
}

graphs::ColoredGraph Design::incidence_graph() const {
    const int v = points(), b = blocks();
    std::vector<int> colors(static_cast<std::size_t>(v + b), 0);
    for (int j = 0; j < b; ++j) colors[static_cast<std::size_t>(v + j)] = 1;
    graphs::ColoredGraph g(v + b, colors);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < b; ++j)
            if (inc_(i, j)) g.add_edge(i, v + j);
    return g;
}

const graphs::CanonicalForm& Design::canonical(const Budget& budget) const {
    if (!canon_) canon_ = graphs::canonize(incidence_graph(), budget);
    return *canon_;
}

bool verify_2design(const Design& d, int v, int k, int lambda) {
    const auto& n = d.incidence();
    if (d.points() != v || d.blocks() != v) return false;
    Eigen::MatrixXi m = n.cast<int>();
    if ((m.rowwise().sum().array() != k).any()) return false;
    if ((m.colwise().sum().array() != k).any()) return false;
    Eigen::MatrixXi gram = m * m.transpose();
    Eigen::MatrixXi expect = Eigen::MatrixXi::Constant(v, v, lambda);
    expect.diagonal().setConstant(k);
    return gram == expect;
}

Design regular_hadamard_to_design(const Eigen::MatrixXi& h) {
    if (h.rows() != h.cols()) throw std::invalid_argument("regular_hadamard_to_design: square input required");
    const int n = static_cast<int>(h.rows());
    if (!((h.array() == 1) || (h.array() == -1)).all())
        throw std::invalid_argument("regular_hadamard_to_design: entries must be +-1");
    if ((h * h.transpose()) != Eigen::MatrixXi::Identity(n, n) * n)
        throw std::invalid_argument("regular_hadamard_to_design: not a Hadamard matrix");
    int s = h.row(0).sum();
    for (int i = 1; i < n; ++i)
        if (h.row(i).sum() != s)
            throw std::invalid_argument("regular_hadamard_to_design: not regular");
    if (s >= 0 || n % 4 != 0 || (n + s) % 2 != 0)
        throw std::invalid_argument("regular_hadamard_to_design: row sum must be the negative root");
    const int k = (n + s) / 2;
    const int lambda = k - n / 4;
    gf3::Matrix inc(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inc(i, j) = h(i, j) == 1 ? 1 : 0;
    Design d(std::move(inc));
    if (!verify_2design(d, n, k, lambda))
        throw std::logic_error("regular_hadamard_to_design: parameter check failed");
    return d;
}

Eigen::MatrixXi design_to_pm1(const Design& d) {
    Eigen::MatrixXi h(d.points(), d.blocks());
    for (int i = 0; i < d.points(); ++i)
        for (int j = 0; j < d.blocks(); ++j) h(i, j) = d.incidence()(i, j) ? 1 : -1;
    return h;
}

gf3::TernaryCode design_code(const Design& d) { return gf3::TernaryCode(d.incidence()); }

namespace {

int perm_order(const graphs::Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    long long ord = 1;
    for (int v = 0; v < n; ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        int len = 0, u = v;
        while (!seen[static_cast<std::size_t>(u)]) {
            seen[static_cast<std::size_t>(u)] = true;
            u = p[static_cast<std::size_t>(u)];
            ++len;
        }
        ord = std::lcm(ord, static_cast<long long>(len));
    }
    return static_cast<int>(ord);
}

std::pair<graphs::Perm, graphs::Perm> split_point_block(const graphs::Perm& g, int v, int b) {
    graphs::Perm pts(static_cast<std::size_t>(v)), blks(static_cast<std::size_t>(b));
    for (int i = 0; i < v; ++i) pts[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i)];
    for (int j = 0; j < b; ++j)
        blks[static_cast<std::size_t>(j)] = g[static_cast<std::size_t>(v + j)] - v;
    return {std::move(pts), std::move(blks)};
}

}  // namespace

AutGroupSummary design_aut_group(const Design& d, const Budget& budget, std::size_t profile_cap) {
    const auto& form = d.canonical(budget);
    AutGroupSummary out;
    out.order = form.group_order;
    for (const auto& g : form.automorphism_generators) {
        auto [pts, blks] = split_point_block(g, d.points(), d.blocks());
        // Replay: the pair must preserve incidence.
        for (int i = 0; i < d.points(); ++i)
            for (int j = 0; j < d.blocks(); ++j)
                if (d.incidence()(i, j) !=
                    d.incidence()(pts[static_cast<std::size_t>(i)], blks[static_cast<std::size_t>(j)]))
                    throw std::logic_error("design_aut_group: generator replay failed");
        out.generators.emplace_back(std::move(pts), std::move(blks));
    }
    if (out.order <= profile_cap) {
        graphs::PermGroup g(d.points() + d.blocks());
        for (const auto& a : form.automorphism_generators) g.add_generator(a);
        for (const auto& e : g.elements(profile_cap)) ++out.element_order_profile[perm_order(e)];
    }
    return out;
}

std::optional<DesignIso> design_isomorphic(const Design& d1, const Design& d2,
                                           const Budget& budget) {
    if (d1.points() != d2.points() || d1.blocks() != d2.blocks()) return std::nullopt;
    auto phi = graphs::isomorphism_from_canonical(d1.canonical(budget), d2.canonical(budget));
    if (!phi) return std::nullopt;
    auto [pts, blks] = split_point_block(*phi, d1.points(), d1.blocks());
    for (int i = 0; i < d1.points(); ++i)
        for (int j = 0; j < d1.blocks(); ++j)
            if (d1.incidence()(i, j) !=
                d2.incidence()(pts[static_cast<std::size_t>(i)], blks[static_cast<std::size_t>(j)]))
                throw std::logic_error("design_isomorphic: witness replay failed");
    return DesignIso{std::move(pts), std::move(blks)};
}

// ---------------------------------------------------------------------------
// Code equivalence

gf3::Vector CodeMonomialWitness::apply(const gf3::Vector& v) const {
    gf3::Vector out(v.cols());
    out.setZero();
    for (Eigen::Index j = 0; j < v.cols(); ++j)
        out(coord_perm[static_cast<std::size_t>(j)]) =
            gf3::mul(scale[static_cast<std::size_t>(j)], v(j));
    return out;
}

namespace {

// Spanning collection of whole weight classes, accumulated in increasing
// (class size, weight) order until the words span the code. The selection
// depends only on monomial invariants, so equivalent codes pick
// corresponding classes.
struct WordSystem {
    std::vector<gf3::Word> words;       // concatenated classes, lex-sorted per class
    std::vector<int> class_of;          // parallel: index of the class of each word
    std::vector<std::pair<long long, int>> classes;  // (size, weight), in chosen order
};

WordSystem spanning_word_system(const gf3::TernaryCode& c) {
    auto hwe = c.hamming_weight_enumerator();
    std::vector<std::pair<long long, int>> order;
    for (int w = 1; w <= c.length(); ++w)
        if (hwe[static_cast<std::size_t>(w)] > 0) order.push_back({hwe[static_cast<std::size_t>(w)], w});
    std::sort(order.begin(), order.end());
    WordSystem sys;
    gf3::Matrix stacked(0, c.length());
    for (auto& [count, w] : order) {
        auto words = c.codewords_of_weight(w);
        sys.classes.push_back({count, w});
        int cls = static_cast<int>(sys.classes.size()) - 1;
        for (const auto& word : words) {
            sys.words.push_back(word);
            sys.class_of.push_back(cls);
        }
        if (gf3::span_rank(sys.words, c.length()) == c.dimension()) return sys;
    }
    throw std::logic_error("spanning_word_system: classes never spanned the code");
}

// Vertices: [0,N) words colored by 2+class, [N,N+n) coordinates "entry 1"
// side, [N+n,N+2n) "entry 2" side, both colored 0, with pairing edges.
graphs::ColoredGraph word_graph(const WordSystem& sys, int n) {
    const int N = static_cast<int>(sys.words.size());
    std::vector<int> colors(static_cast<std::size_t>(N + 2 * n), 0);
    for (int i = 0; i < N; ++i) colors[static_cast<std::size_t>(i)] = 2 + sys.class_of[static_cast<std::size_t>(i)];
    graphs::ColoredGraph g(N + 2 * n, colors);
    for (int j = 0; j < n; ++j) g.add_edge(N + j, N + n + j);
    for (int i = 0; i < N; ++i) {
        const gf3::Word& w = sys.words[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            gf3::Elem e = w.entry(j);
            if (e == 1) g.add_edge(i, N + j);
            if (e == 2) g.add_edge(i, N + n + j);
        }
    }
    return g;
}

CodeMonomialWitness witness_from_vertex_map(const graphs::Perm& phi, int n_words1, int n_words2,
                                            int n) {
    CodeMonomialWitness w;
    w.coord_perm.resize(static_cast<std::size_t>(n));
    w.scale.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        int img = phi[static_cast<std::size_t>(n_words1 + j)] - n_words2;
        w.coord_perm[static_cast<std::size_t>(j)] = img % n;
        w.scale[static_cast<std::size_t>(j)] = img < n ? 1 : 2;
    }
    return w;
}

}  // namespace

std::optional<CodeMonomialWitness> code_monomial_equiv(const gf3::TernaryCode& c1,
                                                       const gf3::TernaryCode& c2,
                                                       const Budget& budget) {
    if (c1.length() != c2.length() || c1.dimension() != c2.dimension()) return std::nullopt;
    if (c1.dimension() == 0) return CodeMonomialWitness{};  // both zero codes
    if (c1.hamming_weight_enumerator() != c2.hamming_weight_enumerator()) return std::nullopt;

    auto sys1 = spanning_word_system(c1);
    auto sys2 = spanning_word_system(c2);
    if (sys1.classes != sys2.classes) return std::nullopt;

    const int n = c1.length();
    auto f1 = graphs::canonize(word_graph(sys1, n), budget);
    auto f2 = graphs::canonize(word_graph(sys2, n), budget);
    auto phi = graphs::isomorphism_from_canonical(f1, f2);
    if (!phi) return std::nullopt;

    CodeMonomialWitness w = witness_from_vertex_map(*phi, static_cast<int>(sys1.words.size()),
                                                    static_cast<int>(sys2.words.size()), n);
    for (int i = 0; i < c1.dimension(); ++i)
        if (!c2.contains(w.apply(c1.generator().row(i))))
            throw std::logic_error("code_monomial_equiv: witness replay failed");
    return w;
}

unsigned long long code_monomial_aut_order(const gf3::TernaryCode& c, const Budget& budget) {
    auto sys = spanning_word_system(c);
    return graphs::canonize(word_graph(sys, c.length()), budget).group_order;
}

}  // namespace symcode::designs
