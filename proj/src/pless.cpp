#include "symcode/pless.hpp"

#include <vector>

namespace symcode::pless {

bool is_odd_prime(int q) {
    if (q < 3 || q % 2 == 0) return false;
    for (int d = 3; static_cast<long long>(d) * d <= q; d += 2)
        if (q % d == 0) return false;
    return true;
}

Eigen::MatrixXi jacobsthal(int q) {
    if (!is_odd_prime(q))
        throw std::invalid_argument("jacobsthal: q must be an odd prime (prime powers are not supported)");
    std::vector<int> chi(static_cast<std::size_t>(q), -1);
    chi[0] = 0;
    for (int x = 1; x < q; ++x) chi[static_cast<std::size_t>((x * x) % q)] = 1;
    Eigen::MatrixXi m(q, q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) m(i, j) = chi[static_cast<std::size_t>(((j - i) % q + q) % q)];
    return m;
}

Eigen::MatrixXi conference_matrix(int q) {
    Eigen::MatrixXi jac = jacobsthal(q);
    Eigen::MatrixXi c(q + 1, q + 1);
    c(0, 0) = 0;
    const int left_border = (q % 4 == 1) ? 1 : -1;  // symmetric vs skew type
    for (int j = 0; j < q; ++j) {
        c(0, j + 1) = 1;
        c(j + 1, 0) = left_border;
    }
    c.block(1, 1, q, q) = jac;
    return c;
}

namespace {

gf3::Matrix mod3(const Eigen::MatrixXi& m) {
    gf3::Matrix r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            r(i, j) = static_cast<gf3::Elem>(((m(i, j) % 3) + 3) % 3);
    return r;
}

}  // namespace

SymmetryCode build_symmetry_code(int q) {
    if (!is_odd_prime(q) || q % 3 != 2)
        throw std::invalid_argument("build_symmetry_code: q must be an odd prime = 2 (mod 3)");
    const int m = q + 1;
    gf3::Matrix gen(m, 2 * m);
    gen.setZero();
    for (int i = 0; i < m; ++i) gen(i, i) = 1;
    gen.block(0, m, m, m) = mod3(conference_matrix(q));
    return {q, gf3::TernaryCode(gen), m};
}

gf3::TernaryCode negate_coordinate(const gf3::TernaryCode& c, int j) {
    return c.with_negated_coordinate(j);
}

ShiftedCode build_l17() {
    SymmetryCode c17 = build_symmetry_code(17);
    return {negate_coordinate(c17.code, c17.infinity_coordinate), c17.infinity_coordinate};
}

}  // namespace symcode::pless
