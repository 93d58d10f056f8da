// SPDX-License-Identifier: Apache-2.0

#include "quandle/table_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace quandle {

TableParseError::TableParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_count(const std::string& token, std::size_t line) {
  std::size_t value = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw TableParseError(line, "expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

}  // namespace

Table read_table(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  enum class Stage { header, order, rows } stage = Stage::header;
  std::size_t n = 0;
  Table table;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    switch (stage) {
      case Stage::header:
        if (line != "quandle v1") {
          throw TableParseError(line_no, "expected header 'quandle v1', got '" + line + "'");
        }
        stage = Stage::order;
        break;
      case Stage::order:
        if (line.rfind("n=", 0) != 0) {
          throw TableParseError(line_no, "expected 'n=<order>', got '" + line + "'");
        }
        n = parse_count(trim(line.substr(2)), line_no);
        if (n == 0) throw TableParseError(line_no, "order must be positive");
        stage = Stage::rows;
        break;
      case Stage::rows: {
        if (table.size() == n) {
          throw TableParseError(line_no, "unexpected content after " + std::to_string(n) +
                                             " rows");
        }
        std::istringstream tokens(line);
        std::vector<Index> row;
        for (std::string tok; tokens >> tok;) {
          const std::size_t v = parse_count(tok, line_no);
          if (v < 1 || v > n) {
            throw TableParseError(line_no, "entry " + tok + " outside 1.." + std::to_string(n));
          }
          row.push_back(v - 1);
        }
        if (row.size() != n) {
          throw TableParseError(line_no, "row has " + std::to_string(row.size()) +
                                             " entries, expected " + std::to_string(n));
        }
        table.push_back(std::move(row));
        break;
      }
    }
  }

  if (stage == Stage::header) throw TableParseError(0, "missing header 'quandle v1'");
  if (stage == Stage::order) throw TableParseError(0, "missing 'n=<order>' line");
  if (table.size() != n) {
    throw TableParseError(0, "expected " + std::to_string(n) + " rows, found " +
                                 std::to_string(table.size()));
  }
  return table;
}

Table read_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TableParseError(0, "cannot open '" + path.string() + "'");
  return read_table(in);
}

void write_table(std::ostream& out, const Table& table) {
  out << "quandle v1\n" << "n=" << table.size() << '\n';
  for (const auto& row : table) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j] + 1;
    out << '\n';
  }
}

std::string format_table(const Table& table) {
  std::ostringstream os;
  write_table(os, table);
  return os.str();
}

}  // namespace quandle
