#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kanto/spd.hpp"

namespace kanto {

enum class MatrixFormat { kPlainText, kJson };

// Plain text: first line n, then n lines of n whitespace-separated numbers.
// JSON: {"n": n, "entries": [n*n numbers, row-major]}.
struct MatrixFile {
  std::string path;
  MatrixFormat format = MatrixFormat::kPlainText;
  std::size_t n = 0;
  std::vector<double> entries;
};

// JSON when the first non-blank character is '{', plain text otherwise.
MatrixFormat detect_format(const std::string& text);

// Throw Parse on malformed input.
MatrixFile parse_matrix(const std::string& text);
MatrixFile parse_matrix(const std::string& text, MatrixFormat format);
MatrixFile read_matrix_file(const std::string& path);

// Numbers are written with 17 significant digits.
std::string format_matrix(std::size_t n, const std::vector<double>& entries,
                          MatrixFormat format);
void write_matrix_file(const std::string& path, std::size_t n,
                       const std::vector<double>& entries, MatrixFormat format);

// read_matrix_file followed by validate_spd.
MatrixSpec load_spd(const std::string& path);

std::string format_double(double v);
// Comma-separated list of numbers, e.g. "2.5,3,2.8"; throws Parse.
std::vector<double> parse_number_list(const std::string& text);

}  // namespace kanto
