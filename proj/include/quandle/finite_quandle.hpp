// SPDX-License-Identifier: Apache-2.0

#ifndef QUANDLE_FINITE_QUANDLE_HPP
#define QUANDLE_FINITE_QUANDLE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace quandle {

using Index = std::size_t;

/// Square operation table, row i column j holding i |> j.
using Table = std::vector<std::vector<Index>>;

/// Partition of {0..n-1}: sorted blocks, ordered by their smallest member.
using Partition = std::vector<std::vector<Index>>;

class MalformedTable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A table that is well formed but breaks a quandle axiom.
class NotAQuandle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a construction that must produce a quandle did not.
class InternalAxiomFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Axiom { idempotence, bijectivity, distributivity };

/// Result of an exhaustive axiom check.
///
/// The witness belongs to the first failing axiom in the order idempotence,
/// bijectivity, distributivity, and is the lexicographically first triple:
///   idempotence    (i, i, i)   with i |> i != i
///   bijectivity    (i, k, j)   with i < k and i |> j == k |> j
///   distributivity (i, j, k)   with (i|>j)|>k != (i|>k)|>(j|>k)
struct AxiomReport {
  bool idempotent = true;
  bool bijective_columns = true;
  bool distributive = true;
  std::optional<Axiom> failed_axiom;
  std::optional<std::array<Index, 3>> first_witness;

  bool ok() const noexcept { return idempotent && bijective_columns && distributive; }
};

/// Throws MalformedTable if the table is empty, not square, or has an entry
/// outside {0..n-1}.
AxiomReport check_axioms(const Table& table);

/// A finite quandle on {0..n-1}. Immutable; construction validates all
/// three axioms.
class FiniteQuandle {
 public:
  /// Throws MalformedTable or NotAQuandle.
  explicit FiniteQuandle(Table table);

  std::size_t size() const noexcept { return table_.size(); }

  /// i |> j, i.e. beta_j(i).
  Index op(Index i, Index j) const { return table_[i][j]; }
  /// beta_j^-1(i).
  Index op_inv(Index i, Index j) const { return inverse_[i][j]; }

  const Table& table() const noexcept { return table_; }
  const Table& inverse_table() const noexcept { return inverse_; }

  friend bool operator==(const FiniteQuandle& a, const FiniteQuandle& b) {
    return a.table_ == b.table_;
  }

 private:
  Table table_;
  Table inverse_;
};

/// Entry [i][j] is beta_j^-1(i).
Table inverse_translations(const FiniteQuandle& q);

/// Connected components of the translation action.
Partition orbits(const FiniteQuandle& q);

/// The block of orbits(q) containing x.
std::vector<Index> orbit_of(const FiniteQuandle& q, Index x);

/// Replaces beta_y by its inverse for every y in the orbit of x. The result
/// is re-validated; a failure throws InternalAxiomFailure. Throws
/// std::out_of_range for a bad x.
FiniteQuandle reverse_orbit(const FiniteQuandle& q, Index x);

struct MedialCheck {
  bool medial = true;
  /// First (w, x, y, z) in lexicographic order with
  /// (w|>x)|>(y|>z) != (w|>y)|>(x|>z).
  std::optional<std::array<Index, 4>> witness;

  explicit operator bool() const noexcept { return medial; }
};

MedialCheck is_medial(const FiniteQuandle& q);

/// beta_y^n is the identity for every y. Negative n iterates the inverse
/// translations; n == 0 always holds.
bool is_n_quandle(const FiniteQuandle& q, std::int64_t n);

/// beta_y^n as a table: entry [x][y] = beta_y^n(x). Negative n allowed.
Table translation_power(const FiniteQuandle& q, std::int64_t n);

}  // namespace quandle

#endif  // QUANDLE_FINITE_QUANDLE_HPP
