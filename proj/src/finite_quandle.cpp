// SPDX-License-Identifier: Apache-2.0

#include "quandle/finite_quandle.hpp"

#include <algorithm>
#include <string>

#include "quandle/union_find.hpp"

namespace quandle {

namespace {

void require_well_formed(const Table& table) {
  const std::size_t n = table.size();
  if (n == 0) throw MalformedTable("table is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw MalformedTable("row " + std::to_string(i) + " has " +
                           std::to_string(table[i].size()) + " entries, expected " +
                           std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        throw MalformedTable("entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") = " + std::to_string(table[i][j]) + " is out of range");
      }
    }
  }
}

Table invert_columns(const Table& table) {
  const std::size_t n = table.size();
  Table inv(n, std::vector<Index>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) inv[table[i][j]][j] = i;
  }
  return inv;
}

std::string describe(const AxiomReport& r) {
  std::string what = "table is not a quandle: ";
  switch (*r.failed_axiom) {
    case Axiom::idempotence: what += "idempotence"; break;
    case Axiom::bijectivity: what += "bijectivity"; break;
    case Axiom::distributivity: what += "right distributivity"; break;
  }
  const auto& w = *r.first_witness;
  return what + " fails at (" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," +
         std::to_string(w[2]) + ")";
}

}  // namespace

AxiomReport check_axioms(const Table& table) {
  require_well_formed(table);
  const std::size_t n = table.size();
  AxiomReport report;
  auto record = [&report](Axiom a, Index p, Index q, Index r) {
    if (!report.failed_axiom) {
      report.failed_axiom = a;
      report.first_witness = std::array<Index, 3>{p, q, r};
    }
  };

  for (Index i = 0; i < n; ++i) {
    if (table[i][i] != i) {
      report.idempotent = false;
      record(Axiom::idempotence, i, i, i);
      break;
    }
  }

  for (Index i = 0; i < n && report.bijective_columns; ++i) {
    for (Index k = i + 1; k < n && report.bijective_columns; ++k) {
      for (Index j = 0; j < n; ++j) {
        if (table[i][j] == table[k][j]) {
          report.bijective_columns = false;
          record(Axiom::bijectivity, i, k, j);
          break;
        }
      }
    }
  }

  for (Index i = 0; i < n && report.distributive; ++i) {
    for (Index j = 0; j < n && report.distributive; ++j) {
      for (Index k = 0; k < n; ++k) {
        if (table[table[i][j]][k] != table[table[i][k]][table[j][k]]) {
          report.distributive = false;
          record(Axiom::distributivity, i, j, k);
          break;
        }
      }
    }
  }
  return report;
}

FiniteQuandle::FiniteQuandle(Table table) : table_(std::move(table)) {
  const AxiomReport report = check_axioms(table_);
  if (!report.ok()) throw NotAQuandle(describe(report));
  inverse_ = invert_columns(table_);
}

Table inverse_translations(const FiniteQuandle& q) { return q.inverse_table(); }

Partition orbits(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  UnionFind uf(n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) uf.unite(x, q.op(x, y));
  }
  return uf.blocks();
}

std::vector<Index> orbit_of(const FiniteQuandle& q, Index x) {
  if (x >= q.size()) throw std::out_of_range("element " + std::to_string(x) + " out of range");
  for (auto& block : orbits(q)) {
    if (std::binary_search(block.begin(), block.end(), x)) return block;
  }
  throw std::logic_error("element missing from every orbit");
}

FiniteQuandle reverse_orbit(const FiniteQuandle& q, Index x) {
  const std::vector<Index> orbit = orbit_of(q, x);
  Table table = q.table();
  for (Index j : orbit) {
    for (Index i = 0; i < q.size(); ++i) table[i][j] = q.op_inv(i, j);
  }
  const AxiomReport report = check_axioms(table);
  if (!report.ok()) throw InternalAxiomFailure("orbit reversal: " + describe(report));
  return FiniteQuandle(std::move(table));
}

MedialCheck is_medial(const FiniteQuandle& q) {
  const std::size_t n = q.size();
  for (Index w = 0; w < n; ++w) {
    for (Index x = 0; x < n; ++x) {
      const Index wx = q.op(w, x);
      for (Index y = 0; y < n; ++y) {
        const Index wy = q.op(w, y);
        for (Index z = 0; z < n; ++z) {
          if (q.op(wx, q.op(y, z)) != q.op(wy, q.op(x, z))) {
            return {false, std::array<Index, 4>{w, x, y, z}};
          }
        }
      }
    }
  }
  return {};
}

Table translation_power(const FiniteQuandle& q, std::int64_t n) {
  const std::size_t size = q.size();
  Table out(size, std::vector<Index>(size));
  std::vector<Index> cycle;
  std::vector<bool> seen(size);
  for (Index y = 0; y < size; ++y) {
    std::fill(seen.begin(), seen.end(), false);
    for (Index start = 0; start < size; ++start) {
      if (seen[start]) continue;
      cycle.clear();
      for (Index x = start; !seen[x]; x = q.op(x, y)) {
        seen[x] = true;
        cycle.push_back(x);
      }
      const auto len = static_cast<std::int64_t>(cycle.size());
      const std::int64_t shift = ((n % len) + len) % len;
      for (std::int64_t p = 0; p < len; ++p) {
        out[cycle[static_cast<std::size_t>(p)]][y] =
            cycle[static_cast<std::size_t>((p + shift) % len)];
      }
    }
  }
  return out;
}

bool is_n_quandle(const FiniteQuandle& q, std::int64_t n) {
  if (n == 0) return true;
  const Table power = translation_power(q, n);
  for (Index x = 0; x < q.size(); ++x) {
    for (Index y = 0; y < q.size(); ++y) {
      if (power[x][y] != x) return false;
    }
  }
  return true;
}

}  // namespace quandle
