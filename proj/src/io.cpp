#include "kanto/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "kanto/error.hpp"

namespace kanto {

namespace {

double parse_number(std::string_view tok) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::kParse, "not a number: '" + std::string(tok) + "'");
  }
  return v;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

MatrixFile parse_plain(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> lines;
  while (std::getline(in, line)) {
    auto toks = split_ws(line);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  if (lines.empty() || lines.front().size() != 1) {
    throw Error(ErrorCode::kParse, "first line must hold the dimension n");
  }
  const double nd = parse_number(lines.front().front());
  if (!(nd >= 1.0) || nd != static_cast<double>(static_cast<std::size_t>(nd))) {
    throw Error(ErrorCode::kParse, "dimension must be a positive integer");
  }
  MatrixFile f;
  f.format = MatrixFormat::kPlainText;
  f.n = static_cast<std::size_t>(nd);
  if (lines.size() != f.n + 1) {
    throw Error(ErrorCode::kParse, "expected " + std::to_string(f.n) +
                                       " matrix rows, found " +
                                       std::to_string(lines.size() - 1));
  }
  for (std::size_t i = 1; i <= f.n; ++i) {
    if (lines[i].size() != f.n) {
      throw Error(ErrorCode::kParse, "row " + std::to_string(i) + " has " +
                                         std::to_string(lines[i].size()) +
                                         " entries, expected " +
                                         std::to_string(f.n));
    }
    for (const auto& t : lines[i]) f.entries.push_back(parse_number(t));
  }
  return f;
}

MatrixFile parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw Error(ErrorCode::kParse, "JSON matrix needs \"n\" and \"entries\"");
  }
  if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0) {
    throw Error(ErrorCode::kParse, "\"n\" must be a positive integer");
  }
  MatrixFile f;
  f.format = MatrixFormat::kJson;
  f.n = j["n"].get<std::size_t>();
  const auto& e = j["entries"];
  if (!e.is_array() || e.size() != f.n * f.n) {
    throw Error(ErrorCode::kParse, "\"entries\" must hold n*n numbers");
  }
  for (const auto& v : e) {
    if (!v.is_number()) throw Error(ErrorCode::kParse, "non-numeric entry");
    f.entries.push_back(v.get<double>());
  }
  return f;
}

}  // namespace

MatrixFormat detect_format(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? MatrixFormat::kJson : MatrixFormat::kPlainText;
  }
  return MatrixFormat::kPlainText;
}

MatrixFile parse_matrix(const std::string& text, MatrixFormat format) {
  return format == MatrixFormat::kJson ? parse_json(text) : parse_plain(text);
}

MatrixFile parse_matrix(const std::string& text) {
  return parse_matrix(text, detect_format(text));
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  MatrixFile f = parse_matrix(ss.str());
  f.path = path;
  return f;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_matrix(std::size_t n, const std::vector<double>& entries,
                          MatrixFormat format) {
  if (entries.size() != n * n) {
    throw Error(ErrorCode::kNotSquare, "entry count does not match n*n");
  }
  std::string out;
  if (format == MatrixFormat::kJson) {
    out = "{\"n\": " + std::to_string(n) + ", \"entries\": [";
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (k) out += ", ";
      out += format_double(entries[k]);
    }
    out += "]}\n";
    return out;
  }
  out = std::to_string(n) + "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out += " ";
      out += format_double(entries[i * n + j]);
    }
    out += "\n";
  }
  return out;
}

void write_matrix_file(const std::string& path, std::size_t n,
                       const std::vector<double>& entries, MatrixFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParse, "cannot write '" + path + "'");
  out << format_matrix(n, entries, format);
}

MatrixSpec load_spd(const std::string& path) {
  const MatrixFile f = read_matrix_file(path);
  return validate_spd(f.entries, f.n);
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    std::string tok = text.substr(start, end - start);
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorCode::kParse, "empty list entry");
    out.push_back(parse_number(std::string_view(tok).substr(b, e - b + 1)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace kanto
