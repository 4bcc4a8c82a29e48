#pragma once

#include "symcode/gf3.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <iosfwd>
#include <string>

// Plain-text matrix formats. One row per line, single-space-separated
// entries; readers ignore leading/trailing whitespace and blank lines.

namespace symcode::io {

gf3::Matrix read_gf3_matrix(std::istream& in);
gf3::Matrix read_gf3_matrix(const std::filesystem::path& file);
void write_gf3_matrix(std::ostream& out, const gf3::Matrix& m);
void write_gf3_matrix(const std::filesystem::path& file, const gf3::Matrix& m);

// Rows of space-separated "1" / "-1".
Eigen::MatrixXi read_pm1_matrix(std::istream& in);
Eigen::MatrixXi read_pm1_matrix(const std::filesystem::path& file);
void write_pm1_matrix(std::ostream& out, const Eigen::MatrixXi& m);
void write_pm1_matrix(const std::filesystem::path& file, const Eigen::MatrixXi& m);

std::string slurp(const std::filesystem::path& file);

}  // namespace symcode::io
