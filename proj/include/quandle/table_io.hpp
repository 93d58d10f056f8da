// SPDX-License-Identifier: Apache-2.0

#ifndef QUANDLE_TABLE_IO_HPP
#define QUANDLE_TABLE_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "quandle/finite_quandle.hpp"

namespace quandle {

/// Diagnostic for a "quandle v1" file; line() is 1-based, 0 when the
/// problem is not tied to a line (e.g. missing rows at end of input).
class TableParseError : public std::runtime_error {
 public:
  TableParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Format:
//   quandle v1
//   n=<order>
//   <n rows of n whitespace-separated 1-indexed entries; row i col j = i |> j>
// Lines starting with '#' and blank lines are ignored anywhere.

/// Reads a table and converts it to 0-indexed form. Only the format is
/// checked here; axioms are left to check_axioms.
Table read_table(std::istream& in);
Table read_table_file(const std::filesystem::path& path);

/// Canonical rendering: header, order line, rows with single spaces.
void write_table(std::ostream& out, const Table& table);
std::string format_table(const Table& table);

}  // namespace quandle

#endif  // QUANDLE_TABLE_IO_HPP
