// SPDX-License-Identifier: Apache-2.0

#ifndef QUANDLE_VARIETY_HPP
#define QUANDLE_VARIETY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandle/finite_quandle.hpp"
#include "quandle/union_find.hpp"

namespace quandle {

enum class Identity { medial, n_quandle };

/// Defining identity of a variety. The exponent only matters for n_quandle.
struct IdentitySpec {
  Identity tag = Identity::medial;
  std::int64_t exponent = 0;

  static IdentitySpec medial() { return {Identity::medial, 0}; }
  static IdentitySpec n_quandle(std::int64_t n) { return {Identity::n_quandle, n}; }

  friend bool operator==(const IdentitySpec& a, const IdentitySpec& b) {
    return a.tag == b.tag && (a.tag == Identity::medial || a.exponent == b.exponent);
  }
};

std::string to_string(const IdentitySpec& id);

/// Does q itself satisfy the identity?
bool satisfies(const FiniteQuandle& q, const IdentitySpec& id);

/// An equivalence relation on a finite quandle that is kept closed under
/// the translations: merging a and b also merges a|>c with b|>c, c|>a with
/// c|>b, and the same for the inverse operation, until nothing changes.
class Congruence {
 public:
  explicit Congruence(const FiniteQuandle& q) : q_(&q), classes_(q.size()) {}

  /// Merge the classes of a and b and propagate. Returns true if anything
  /// changed.
  bool merge(Index a, Index b);

  bool same(Index a, Index b) { return classes_.same(a, b); }
  Index find(Index a) { return classes_.find(a); }

  Partition partition() { return classes_.blocks(); }

  /// Exhaustive compatibility check; holds after every merge.
  bool is_compatible();

  const FiniteQuandle& quandle() const noexcept { return *q_; }

 private:
  const FiniteQuandle* q_;
  UnionFind classes_;
};

/// Q / theta together with the projection element -> class index.
/// Classes are numbered in order of their smallest element.
struct Quotient {
  FiniteQuandle quandle;
  std::vector<Index> projection;
  Partition partition;
};

/// Quotient by a partition that must be a congruence; throws
/// std::invalid_argument otherwise.
Quotient quotient_by_partition(const FiniteQuandle& q, const Partition& partition);

/// Q / theta for the smallest congruence theta whose quotient satisfies id.
///
/// Fixpoint loop: scan the identity's instances over class representatives
/// in lexicographic order; each violated instance is merged (the merge is
/// forced in every quotient that satisfies id) and the congruence is closed
/// again. Stops when a full scan finds no violation.
Quotient quotient_by_identity(const FiniteQuandle& q, const IdentitySpec& id);

class TooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest order accepted by brute_force_smallest_congruence.
inline constexpr std::size_t kBruteForceLimit = 6;

/// Enumerates every set partition of {0..n-1}, keeps the congruences whose
/// quotient satisfies id, and returns the finest. Throws TooLarge for
/// n > kBruteForceLimit.
Partition brute_force_smallest_congruence(const FiniteQuandle& q, const IdentitySpec& id);

}  // namespace quandle

#endif  // QUANDLE_VARIETY_HPP
