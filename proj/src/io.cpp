#include "symcode/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace symcode::io {

namespace {

std::vector<std::vector<int>> read_int_rows(std::istream& in) {
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        int x;
        while (ls >> x) row.push_back(x);
        if (!ls.eof() && ls.fail()) throw std::runtime_error("matrix read: non-numeric token");
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error("matrix read: ragged rows");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::ifstream open_input(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    return in;
}

std::ofstream open_output(const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
    return out;
}

}  // namespace

gf3::Matrix read_gf3_matrix(std::istream& in) {
    auto rows = read_int_rows(in);
    gf3::Matrix m(static_cast<gf3::Index>(rows.size()),
                  rows.empty() ? 0 : static_cast<gf3::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            int x = rows[i][j];
            if (x < 0 || x > 2) throw std::runtime_error("gf3 matrix read: entry not in {0,1,2}");
            m(static_cast<gf3::Index>(i), static_cast<gf3::Index>(j)) =
                static_cast<gf3::Elem>(x);
        }
    return m;
}

gf3::Matrix read_gf3_matrix(const std::filesystem::path& file) {
    auto in = open_input(file);
    return read_gf3_matrix(in);
}

void write_gf3_matrix(std::ostream& out, const gf3::Matrix& m) {
    for (gf3::Index i = 0; i < m.rows(); ++i) {
        for (gf3::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << static_cast<int>(m(i, j));
        }
        out << '\n';
    }
}

void write_gf3_matrix(const std::filesystem::path& file, const gf3::Matrix& m) {
    auto out = open_output(file);
    write_gf3_matrix(out, m);
}

Eigen::MatrixXi read_pm1_matrix(std::istream& in) {
    auto rows = read_int_rows(in);
    Eigen::MatrixXi m(static_cast<Eigen::Index>(rows.size()),
                      rows.empty() ? 0 : static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            int x = rows[i][j];
            if (x != 1 && x != -1) throw std::runtime_error("pm1 matrix read: entry not +-1");
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = x;
        }
    return m;
}

Eigen::MatrixXi read_pm1_matrix(const std::filesystem::path& file) {
    auto in = open_input(file);
    return read_pm1_matrix(in);
}

void write_pm1_matrix(std::ostream& out, const Eigen::MatrixXi& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
}

void write_pm1_matrix(const std::filesystem::path& file, const Eigen::MatrixXi& m) {
    auto out = open_output(file);
    write_pm1_matrix(out, m);
}

std::string slurp(const std::filesystem::path& file) {
    auto in = open_input(file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace symcode::io
