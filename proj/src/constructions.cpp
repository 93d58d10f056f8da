// SPDX-License-Identifier: Apache-2.0

#include "quandle/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quandle {

namespace {

Index mod(std::int64_t v, std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<Index>(((v % m) + m) % m);
}

}  // namespace

FiniteQuandle trivial_quandle(std::size_t n) {
  Table table(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i) std::fill(table[i].begin(), table[i].end(), i);
  return FiniteQuandle(std::move(table));
}

FiniteQuandle dihedral_quandle(std::size_t n) { return affine_quandle(n, -1); }

FiniteQuandle affine_quandle(std::size_t n, std::int64_t t) {
  if (n == 0) throw std::invalid_argument("order must be positive");
  if (std::gcd(static_cast<std::int64_t>(mod(t, n)), static_cast<std::int64_t>(n)) != 1 && n > 1) {
    throw std::invalid_argument("t must be a unit modulo n");
  }
  Table table(n, std::vector<Index>(n));
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const auto xs = static_cast<std::int64_t>(x);
      const auto ys = static_cast<std::int64_t>(y);
      table[x][y] = mod(t * xs + (1 - t) * ys, n);
    }
  }
  return FiniteQuandle(std::move(table));
}

FiniteQuandle tetrahedral_quandle() {
  // GF(4) = {0, 1, w, w+1} encoded as bit patterns 0..3 with w = 2.
  // Multiplication by w: 1 -> w, w -> w+1, w+1 -> 1. Then 1 - w = w^2 = w+1.
  auto times_w = [](Index a) -> Index {
    static constexpr Index table[4] = {0, 2, 3, 1};
    return table[a];
  };
  Table table(4, std::vector<Index>(4));
  for (Index x = 0; x < 4; ++x) {
    for (Index y = 0; y < 4; ++y) table[x][y] = times_w(x) ^ times_w(times_w(y));
  }
  return FiniteQuandle(std::move(table));
}

FiniteQuandle disjoint_union(const FiniteQuandle& a, const FiniteQuandle& b) {
  const std::size_t na = a.size();
  const std::size_t n = na + b.size();
  Table table(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const bool i_in_a = i < na;
      const bool j_in_a = j < na;
      if (i_in_a != j_in_a) {
        table[i][j] = i;
      } else if (i_in_a) {
        table[i][j] = a.op(i, j);
      } else {
        table[i][j] = na + b.op(i - na, j - na);
      }
    }
  }
  return FiniteQuandle(std::move(table));
}

FiniteQuandle relabel(const FiniteQuandle& q, const std::vector<Index>& perm) {
  const std::size_t n = q.size();
  if (perm.size() != n) throw std::invalid_argument("permutation has wrong length");
  Table table(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) table.at(perm[i]).at(perm[j]) = perm[q.op(i, j)];
  }
  return FiniteQuandle(std::move(table));
}

std::optional<FiniteQuandle> random_quandle(std::size_t n, std::mt19937_64& rng,
                                            std::size_t max_attempts) {
  if (n == 0) return std::nullopt;
  Table table(n, std::vector<Index>(n));
  std::vector<Index> others;
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    for (Index j = 0; j < n; ++j) {
      others.clear();
      for (Index i = 0; i < n; ++i)
        if (i != j) others.push_back(i);
      std::vector<Index> image = others;
      std::shuffle(image.begin(), image.end(), rng);
      table[j][j] = j;
      for (std::size_t k = 0; k < others.size(); ++k) table[others[k]][j] = image[k];
    }
    if (check_axioms(table).ok()) return FiniteQuandle(table);
  }
  return std::nullopt;
}

}  // namespace quandle
