// SPDX-License-Identifier: Apache-2.0

#include "quandle/variety.hpp"

#include <algorithm>
#include <utility>

namespace quandle {

std::string to_string(const IdentitySpec& id) {
  if (id.tag == Identity::medial) return "medial";
  return "n-quandle(n=" + std::to_string(id.exponent) + ")";
}

bool satisfies(const FiniteQuandle& q, const IdentitySpec& id) {
  return id.tag == Identity::medial ? is_medial(q).medial : is_n_quandle(q, id.exponent);
}

bool Congruence::merge(Index a, Index b) {
  const FiniteQuandle& q = *q_;
  const std::size_t n = q.size();
  bool changed = false;
  std::vector<std::pair<Index, Index>> pending{{a, b}};
  while (!pending.empty()) {
    const auto [x, y] = pending.back();
    pending.pop_back();
    if (!classes_.unite(x, y)) continue;
    changed = true;
    for (Index c = 0; c < n; ++c) {
      pending.emplace_back(q.op(x, c), q.op(y, c));
      pending.emplace_back(q.op(c, x), q.op(c, y));
      pending.emplace_back(q.op_inv(x, c), q.op_inv(y, c));
      pending.emplace_back(q.op_inv(c, x), q.op_inv(c, y));
    }
  }
  return changed;
}

bool Congruence::is_compatible() {
  const FiniteQuandle& q = *q_;
  const std::size_t n = q.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (!same(a, b)) continue;
      for (Index c = 0; c < n; ++c) {
        if (!same(q.op(a, c), q.op(b, c)) || !same(q.op(c, a), q.op(c, b)) ||
            !same(q.op_inv(a, c), q.op_inv(b, c)) || !same(q.op_inv(c, a), q.op_inv(c, b))) {
          return false;
        }
      }
    }
  }
  return true;
}

Quotient quotient_by_partition(const FiniteQuandle& q, const Partition& partition) {
  const std::size_t n = q.size();
  std::vector<Index> projection(n, n);
  std::vector<Partition::value_type> blocks = partition;
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  for (Index k = 0; k < blocks.size(); ++k) {
    for (Index x : blocks[k]) {
      if (x >= n || projection[x] != n) throw std::invalid_argument("not a partition of the carrier");
      projection[x] = k;
    }
  }
  if (std::find(projection.begin(), projection.end(), n) != projection.end()) {
    throw std::invalid_argument("partition does not cover the carrier");
  }

  const std::size_t m = blocks.size();
  Table table(m, std::vector<Index>(m, m));
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      Index& slot = table[projection[a]][projection[b]];
      const Index image = projection[q.op(a, b)];
      if (slot != m && slot != image) throw std::invalid_argument("partition is not a congruence");
      slot = image;
    }
  }
  return {FiniteQuandle(std::move(table)), std::move(projection), std::move(blocks)};
}

namespace {

std::vector<Index> representatives(Congruence& theta, std::size_t n) {
  std::vector<Index> reps;
  for (Index x = 0; x < n; ++x) {
    if (theta.find(x) == x) reps.push_back(x);
  }
  return reps;
}

bool close_medial(Congruence& theta) {
  const FiniteQuandle& q = theta.quandle();
  const std::vector<Index> reps = representatives(theta, q.size());
  bool changed = false;
  for (Index w : reps) {
    for (Index x : reps) {
      for (Index y : reps) {
        for (Index z : reps) {
          const Index lhs = q.op(q.op(w, x), q.op(y, z));
          const Index rhs = q.op(q.op(w, y), q.op(x, z));
          changed |= theta.merge(lhs, rhs);
        }
      }
    }
  }
  return changed;
}

bool close_n_quandle(Congruence& theta, std::int64_t exponent) {
  const FiniteQuandle& q = theta.quandle();
  const Table power = translation_power(q, exponent);
  const std::vector<Index> reps = representatives(theta, q.size());
  bool changed = false;
  for (Index x : reps) {
    for (Index y : reps) changed |= theta.merge(power[x][y], x);
  }
  return changed;
}

}  // namespace

Quotient quotient_by_identity(const FiniteQuandle& q, const IdentitySpec& id) {
  Congruence theta(q);
  if (id.tag == Identity::medial) {
    while (close_medial(theta)) {
    }
  } else {
    while (close_n_quandle(theta, id.exponent)) {
    }
  }
  return quotient_by_partition(q, theta.partition());
}

namespace {

// The oracle below works on a plain label vector and iterates translations
// directly, sharing nothing with the closure above.

bool labels_compatible(const FiniteQuandle& q, const std::vector<Index>& label) {
  const std::size_t n = q.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (label[a] != label[b]) continue;
      for (Index c = 0; c < n; ++c) {
        if (label[q.op(a, c)] != label[q.op(b, c)]) return false;
        if (label[q.op(c, a)] != label[q.op(c, b)]) return false;
        if (label[q.op_inv(a, c)] != label[q.op_inv(b, c)]) return false;
        if (label[q.op_inv(c, a)] != label[q.op_inv(c, b)]) return false;
      }
    }
  }
  return true;
}

bool labels_satisfy(const FiniteQuandle& q, const std::vector<Index>& label,
                    const IdentitySpec& id) {
  const std::size_t n = q.size();
  if (id.tag == Identity::medial) {
    for (Index w = 0; w < n; ++w)
      for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
          for (Index z = 0; z < n; ++z)
            if (label[q.op(q.op(w, x), q.op(y, z))] != label[q.op(q.op(w, y), q.op(x, z))])
              return false;
    return true;
  }
  const std::int64_t steps = id.exponent < 0 ? -id.exponent : id.exponent;
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      Index v = x;
      for (std::int64_t s = 0; s < steps; ++s) v = id.exponent < 0 ? q.op_inv(v, y) : q.op(v, y);
      if (label[v] != label[x]) return false;
    }
  }
  return true;
}

bool refines(const std::vector<Index>& fine, const std::vector<Index>& coarse) {
  for (Index a = 0; a < fine.size(); ++a)
    for (Index b = a + 1; b < fine.size(); ++b)
      if (fine[a] == fine[b] && coarse[a] != coarse[b]) return false;
  return true;
}

}  // namespace

Partition brute_force_smallest_congruence(const FiniteQuandle& q, const IdentitySpec& id) {
  const std::size_t n = q.size();
  if (n > kBruteForceLimit) {
    throw TooLarge("brute force is limited to order " + std::to_string(kBruteForceLimit) +
                   ", got " + std::to_string(n));
  }

  // Restricted growth strings: label[0] = 0, label[i] <= 1 + max(label[0..i)).
  std::vector<std::vector<Index>> admissible;
  std::vector<Index> label(n, 0);
  auto visit = [&](auto&& self, Index pos, Index max_label) -> void {
    if (pos == n) {
      if (labels_compatible(q, label) && labels_satisfy(q, label, id)) admissible.push_back(label);
      return;
    }
    for (Index v = 0; v <= max_label + 1; ++v) {
      label[pos] = v;
      self(self, pos + 1, std::max(max_label, v));
    }
  };
  label[0] = 0;
  visit(visit, 1, 0);

  auto classes = [](const std::vector<Index>& l) {
    return *std::max_element(l.begin(), l.end()) + 1;
  };
  const auto finest = std::max_element(
      admissible.begin(), admissible.end(),
      [&](const auto& a, const auto& b) { return classes(a) < classes(b); });
  for (const auto& other : admissible) {
    if (!refines(*finest, other)) throw std::logic_error("admissible congruences have no finest");
  }

  Partition out(classes(*finest));
  for (Index x = 0; x < n; ++x) out[(*finest)[x]].push_back(x);
  return out;
}

}  // namespace quandle
