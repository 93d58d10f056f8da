// SPDX-License-Identifier: Apache-2.0

#ifndef QUANDLE_LATTICE_HPP
#define QUANDLE_LATTICE_HPP

#include <optional>
#include <vector>

#include "quandle/ring_n.hpp"

namespace quandle {

/// Subgroup of (N,+) = Z^2 spanned by a list of shifts, each read in the
/// coordinates (n1, n2), together with its column Hermite normal form
///
///   H = | h11  h12 |     columns (h11, 0) and (h12, h22),
///       |  0   h22 |     h11, h22 >= 0, 0 <= h12 < h11 when h11 > 0.
///
/// Every HNF column carries an integer certificate expressing it in the
/// generators, so membership can be checked both ways.
class CollapseLattice {
 public:
  /// Column reduction over Z with extended gcds; exact.
  static CollapseLattice close(std::vector<NElem> generators);

  const std::vector<NElem>& generators() const noexcept { return generators_; }

  const Integer& h11() const noexcept { return h11_; }
  const Integer& h12() const noexcept { return h12_; }
  const Integer& h22() const noexcept { return h22_; }

  int rank() const noexcept { return (h11_ != 0) + (h22_ != 0); }

  /// [Z^2 : L] = h11 * h22 for rank 2; nullopt (infinite) otherwise.
  std::optional<Integer> index() const;

  /// Nonzero HNF columns.
  std::vector<NElem> basis() const;

  bool contains(const NElem& v) const;

  /// Generators lie in the HNF span, and each HNF column equals its
  /// certificate combination of the generators.
  bool verify() const;

  friend bool operator==(const CollapseLattice& a, const CollapseLattice& b) {
    return a.h11_ == b.h11_ && a.h12_ == b.h12_ && a.h22_ == b.h22_;
  }

 private:
  std::vector<NElem> generators_;
  Integer h11_{0}, h12_{0}, h22_{0};
  std::vector<Integer> cert_first_;   // combination giving (h11, 0)
  std::vector<Integer> cert_second_;  // combination giving (h12, h22)
};

/// Same as CollapseLattice::close.
CollapseLattice hnf_close(const std::vector<NElem>& shifts);

}  // namespace quandle

#endif  // QUANDLE_LATTICE_HPP
