// SPDX-License-Identifier: Apache-2.0

#ifndef QUANDLE_CONSTRUCTIONS_HPP
#define QUANDLE_CONSTRUCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "quandle/finite_quandle.hpp"

namespace quandle {

/// x |> y = x.
FiniteQuandle trivial_quandle(std::size_t n);

/// x |> y = 2y - x (mod n).
FiniteQuandle dihedral_quandle(std::size_t n);

/// Alexander quandle on Z_n: x |> y = t x + (1 - t) y (mod n). Throws
/// std::invalid_argument unless t is a unit mod n.
FiniteQuandle affine_quandle(std::size_t n, std::int64_t t);

/// Alexander quandle on GF(4) with t a primitive element (order 4, connected).
FiniteQuandle tetrahedral_quandle();

/// Elements of a, then elements of b; each part acts trivially on the other.
FiniteQuandle disjoint_union(const FiniteQuandle& a, const FiniteQuandle& b);

/// Isomorphic copy with element i renamed perm[i].
FiniteQuandle relabel(const FiniteQuandle& q, const std::vector<Index>& perm);

/// Rejection sampling over tables whose columns are permutations fixing the
/// diagonal. Practical for n <= 4.
std::optional<FiniteQuandle> random_quandle(std::size_t n, std::mt19937_64& rng,
                                            std::size_t max_attempts = 100000);

}  // namespace quandle

#endif  // QUANDLE_CONSTRUCTIONS_HPP
