#include "symcode/hadamard.hpp"

#include "symcode/pless.hpp"

#include <algorithm>

namespace symcode::hadamard {

bool is_pm1(const Matrix& m) {
    return (m.array().abs() == 1).all();
}

bool is_hadamard(const Matrix& h) {
    if (h.rows() != h.cols() || h.rows() == 0) return false;
    if (!is_pm1(h)) return false;
    const Eigen::Index n = h.rows();
    return (h * h.transpose()) == Eigen::MatrixXi::Identity(n, n) * static_cast<int>(n);
}

bool is_regular(const Matrix& h) {
    if (h.rows() == 0) return false;
    int s = h.row(0).sum();
    for (Eigen::Index i = 1; i < h.rows(); ++i)
        if (h.row(i).sum() != s) return false;
    return true;
}

bool is_normalized(const Matrix& h) {
    return h.rows() > 0 && (h.row(0).array() == 1).all() && (h.col(0).array() == 1).all();
}

Eigen::RowVectorXi gf3_to_pm1(const gf3::Vector& v) {
    Eigen::RowVectorXi r(v.cols());
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
        if (v(j) == 0) throw std::invalid_argument("gf3_to_pm1: zero entry (word must have full weight)");
        r(j) = v(j) == 1 ? 1 : -1;
    }
    return r;
}

gf3::Vector pm1_to_gf3(const Eigen::RowVectorXi& row) {
    gf3::Vector v(row.cols());
    for (Eigen::Index j = 0; j < row.cols(); ++j) {
        if (row(j) != 1 && row(j) != -1) throw std::invalid_argument("pm1_to_gf3: entry not +-1");
        v(j) = row(j) == 1 ? 1 : 2;
    }
    return v;
}

Eigen::RowVectorXi word_to_pm1(const gf3::Word& w, int n) {
    return gf3_to_pm1(gf3::unpack(w, n));
}

Matrix normalize(const Matrix& h, Eigen::Index row, Eigen::Index col) {
    if (row < 0 || row >= h.rows() || col < 0 || col >= h.cols())
        throw std::out_of_range("hadamard::normalize: index out of range");
    Matrix m = h;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        if (m(row, j) == -1) m.col(j) = -m.col(j);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        if (m(i, col) == -1) m.row(i) = -m.row(i);
    return m;
}

Matrix paley_type_ii(int q) {
    if (!pless::is_odd_prime(q) || q % 4 != 1)
        throw std::invalid_argument("paley_type_ii: q must be a prime = 1 (mod 4)");
    Eigen::MatrixXi c = pless::conference_matrix(q);
    const int m = q + 1;
    Matrix h(2 * m, 2 * m);
    Eigen::MatrixXi id = Eigen::MatrixXi::Identity(m, m);
    h.block(0, 0, m, m) = c + id;
    h.block(0, m, m, m) = c - id;
    h.block(m, 0, m, m) = c - id;
    h.block(m, m, m, m) = -c - id;
    return h;
}

Matrix MonomialPair::apply(const Matrix& h) const {
    Matrix out(h.rows(), h.cols());
    for (Eigen::Index i = 0; i < h.rows(); ++i)
        for (Eigen::Index j = 0; j < h.cols(); ++j)
            out(row_perm[static_cast<std::size_t>(i)], col_perm[static_cast<std::size_t>(j)]) =
                row_sign[static_cast<std::size_t>(i)] * col_sign[static_cast<std::size_t>(j)] *
                h(i, j);
    return out;
}

bool MonomialPair::operator<(const MonomialPair& o) const {
    return std::tie(row_perm, row_sign, col_perm, col_sign) <
           std::tie(o.row_perm, o.row_sign, o.col_perm, o.col_sign);
}

graphs::ColoredGraph signed_graph(const Matrix& h) {
    if (!is_pm1(h)) throw std::invalid_argument("signed_graph: entries must be +-1");
    const int n = static_cast<int>(h.rows());
    const int m = static_cast<int>(h.cols());
    // rows+: [0,n), rows-: [n,2n), cols+: [2n,2n+m), cols-: [2n+m,2n+2m)
    std::vector<int> colors(static_cast<std::size_t>(2 * n + 2 * m), 0);
    for (int j = 0; j < 2 * m; ++j) colors[static_cast<std::size_t>(2 * n + j)] = 1;
    graphs::ColoredGraph g(2 * n + 2 * m, colors);
    for (int i = 0; i < n; ++i) g.add_edge(i, n + i);
    for (int j = 0; j < m; ++j) g.add_edge(2 * n + j, 2 * n + m + j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            if (h(i, j) == 1) {
                g.add_edge(i, 2 * n + j);
                g.add_edge(n + i, 2 * n + m + j);
            } else {
                g.add_edge(i, 2 * n + m + j);
                g.add_edge(n + i, 2 * n + j);
            }
        }
    return g;
}

MonomialPair monomial_from_vertex_map(const graphs::Perm& phi, int n) {
    MonomialPair p;
    p.row_perm.resize(static_cast<std::size_t>(n));
    p.row_sign.resize(static_cast<std::size_t>(n));
    p.col_perm.resize(static_cast<std::size_t>(n));
    p.col_sign.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int img = phi[static_cast<std::size_t>(i)];
        p.row_perm[static_cast<std::size_t>(i)] = img % n;
        p.row_sign[static_cast<std::size_t>(i)] = img < n ? 1 : -1;
        int jimg = phi[static_cast<std::size_t>(2 * n + i)] - 2 * n;
        p.col_perm[static_cast<std::size_t>(i)] = jimg % n;
        p.col_sign[static_cast<std::size_t>(i)] = jimg < n ? 1 : -1;
    }
    return p;
}

AutGroup automorphism_group(const Matrix& h, const Budget& budget) {
    if (h.rows() != h.cols()) throw std::invalid_argument("automorphism_group: square matrix required");
    const int n = static_cast<int>(h.rows());
    auto form = graphs::canonize(signed_graph(h), budget);
    AutGroup out;
    out.order = form.group_order;
    for (const auto& a : form.automorphism_generators) {
        MonomialPair p = monomial_from_vertex_map(a, n);
        if (p.apply(h) != h) throw std::logic_error("automorphism_group: generator replay failed");
        out.generators.push_back(std::move(p));
    }
    return out;
}

std::optional<MonomialPair> monomial_equiv(const Matrix& h1, const Matrix& h2,
                                           const Budget& budget) {
    if (h1.rows() != h2.rows() || h1.cols() != h2.cols())
        throw std::invalid_argument("monomial_equiv: size mismatch");
    if (h1.rows() != h1.cols()) throw std::invalid_argument("monomial_equiv: square matrices required");
    const int n = static_cast<int>(h1.rows());
    auto f1 = graphs::canonize(signed_graph(h1), budget);
    auto f2 = graphs::canonize(signed_graph(h2), budget);
    auto phi = graphs::isomorphism_from_canonical(f1, f2);
    if (!phi) return std::nullopt;
    MonomialPair w = monomial_from_vertex_map(*phi, n);
    if (w.apply(h1) != h2) throw std::logic_error("monomial_equiv: witness replay failed");

    // Reduce to the least witness over the coset Aut(h2) o w when the group
    // is enumerable.
    constexpr std::size_t kEnumCap = 1 << 17;
    try {
        graphs::PermGroup g2(static_cast<int>(phi->size()));
        for (const auto& a : f2.automorphism_generators) g2.add_generator(a);
        if (g2.order() <= kEnumCap) {
            MonomialPair best = w;
            for (const auto& a : g2.elements(kEnumCap)) {
                MonomialPair cand = monomial_from_vertex_map(graphs::compose(a, *phi), n);
                if (cand < best) best = cand;
            }
            if (best.apply(h1) != h2) throw std::logic_error("monomial_equiv: witness replay failed");
            return best;
        }
    } catch (const std::runtime_error&) {
        // Enumeration cap exceeded: fall through to the canonical witness.
    }
    return w;
}

std::vector<std::uint64_t> certificate(const Matrix& h, const Budget& budget) {
    return graphs::canonize(signed_graph(h), budget).certificate;
}

designs::Design hadamard_3design(const Matrix& h) {
    if (!is_hadamard(h)) throw std::invalid_argument("hadamard_3design: not a Hadamard matrix");
    if (!is_normalized(h)) throw std::invalid_argument("hadamard_3design: matrix must be normalized");
    const int n = static_cast<int>(h.rows());
    gf3::Matrix inc(n, 2 * (n - 1));
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            inc(j, 2 * (i - 1)) = h(i, j) == 1 ? 1 : 0;
            inc(j, 2 * (i - 1) + 1) = h(i, j) == -1 ? 1 : 0;
        }
    return designs::Design(std::move(inc));
}

}  // namespace symcode::hadamard
