// SPDX-License-Identifier: Apache-2.0

#include "quandle/finite_quandle.hpp"

#include <gtest/gtest.h>

#include "quandle/constructions.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace quandle {
namespace {

Table trivial_table(std::size_t n) { return trivial_quandle(n).table(); }

// 2y - x mod 3, written out by hand.
const Table kDihedral3 = {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}};

TEST(CheckAxioms, TrivialAndDihedralPass) {
  for (const Table& t : {trivial_table(3), kDihedral3}) {
    const AxiomReport r = check_axioms(t);
    EXPECT_TRUE(r.idempotent);
    EXPECT_TRUE(r.bijective_columns);
    EXPECT_TRUE(r.distributive);
    EXPECT_FALSE(r.first_witness.has_value());
  }
  EXPECT_EQ(dihedral_quandle(3).table(), kDihedral3);
}

TEST(CheckAxioms, BrokenIdempotence) {
  Table t = trivial_table(3);
  t[0][0] = 1;
  const AxiomReport r = check_axioms(t);
  EXPECT_FALSE(r.idempotent);
  ASSERT_TRUE(r.first_witness.has_value());
  EXPECT_EQ(*r.failed_axiom, Axiom::idempotence);
  EXPECT_EQ((*r.first_witness)[0], 0u);
  EXPECT_EQ((*r.first_witness)[1], 0u);
}

TEST(CheckAxioms, BrokenBijectivityWitness) {
  // Column 2 sends rows 0 and 1 to 0.
  const Table t = {{0, 0, 0}, {1, 1, 0}, {2, 2, 2}};
  const AxiomReport r = check_axioms(t);
  EXPECT_TRUE(r.idempotent);
  EXPECT_FALSE(r.bijective_columns);
  EXPECT_EQ(*r.failed_axiom, Axiom::bijectivity);
  EXPECT_EQ(*r.first_witness, (std::array<Index, 3>{0, 1, 2}));
}

TEST(CheckAxioms, DistributivityWitnessIsLexicographicallyFirst) {
  // Idempotent with permutation columns, but not distributive.
  const Table t = {{0, 2, 1}, {1, 1, 0}, {2, 0, 2}};
  const AxiomReport r = check_axioms(t);
  EXPECT_TRUE(r.idempotent);
  EXPECT_TRUE(r.bijective_columns);
  ASSERT_FALSE(r.distributive);
  const auto w = *r.first_witness;
  // Recompute the first failing triple by brute force.
  std::array<Index, 3> expected{};
  bool found = false;
  for (Index i = 0; i < 3 && !found; ++i)
    for (Index j = 0; j < 3 && !found; ++j)
      for (Index k = 0; k < 3 && !found; ++k)
        if (t[t[i][j]][k] != t[t[i][k]][t[j][k]]) {
          expected = {i, j, k};
          found = true;
        }
  EXPECT_EQ(w, expected);
}

TEST(CheckAxioms, MalformedTables) {
  EXPECT_THROW(check_axioms({}), MalformedTable);
  EXPECT_THROW(check_axioms({{0, 1}, {1}}), MalformedTable);
  EXPECT_THROW(check_axioms({{0, 5}, {1, 1}}), MalformedTable);
  EXPECT_THROW(FiniteQuandle({{1, 0}, {0, 1}}), NotAQuandle);
}

TEST(InverseTranslations, Examples) {
  const FiniteQuandle trivial = trivial_quandle(4);
  const Table inv = inverse_translations(trivial);
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j) EXPECT_EQ(inv[i][j], i);

  const FiniteQuandle d3(kDihedral3);
  EXPECT_EQ(inverse_translations(d3), kDihedral3);
}

TEST(InverseTranslations, RoundTripOnCorpus) {
  for (const auto& [name, q] : testing::small_corpus()) {
    const Table inv = inverse_translations(q);
    EXPECT_EQ(inv, testing::search_inverse(q.table())) << name;
    for (Index i = 0; i < q.size(); ++i)
      for (Index j = 0; j < q.size(); ++j) {
        EXPECT_EQ(q.op(inv[i][j], j), i);
        EXPECT_EQ(inv[q.op(i, j)][j], i);
      }
  }
}

TEST(Orbits, Examples) {
  EXPECT_EQ(orbits(trivial_quandle(3)), (Partition{{0}, {1}, {2}}));
  EXPECT_EQ(orbits(FiniteQuandle(kDihedral3)), (Partition{{0, 1, 2}}));
  EXPECT_EQ(orbits(FiniteQuandle({{0, 0}, {1, 1}})), (Partition{{0}, {1}}));
  EXPECT_EQ(orbits(dihedral_quandle(4)), (Partition{{0, 2}, {1, 3}}));
}

TEST(Orbits, MatchBreadthFirstClosure) {
  for (const auto& [name, q] : testing::small_corpus()) {
    EXPECT_EQ(orbits(q), testing::bfs_orbits(q)) << name;
  }
}

TEST(ReverseOrbit, InvolutionsAndTrivialAreFixed) {
  const FiniteQuandle d3 = dihedral_quandle(3);
  const FiniteQuandle triv = trivial_quandle(3);
  for (Index x = 0; x < 3; ++x) {
    EXPECT_EQ(reverse_orbit(d3, x), d3);
    EXPECT_EQ(reverse_orbit(triv, x), triv);
  }
  EXPECT_THROW(reverse_orbit(d3, 3), std::out_of_range);
}

TEST(ReverseOrbit, OnlyColumnsInTheOrbitChange) {
  const FiniteQuandle q = disjoint_union(trivial_quandle(1), affine_quandle(5, 2));
  const FiniteQuandle r = reverse_orbit(q, 3);
  const Table inv = testing::search_inverse(q.table());
  for (Index i = 0; i < q.size(); ++i) {
    EXPECT_EQ(r.op(i, 0), q.op(i, 0));
    for (Index j = 1; j < q.size(); ++j) EXPECT_EQ(r.op(i, j), inv[i][j]);
  }
  // Reversing Z_5 with t = 2 gives the affine quandle with t^-1 = 3.
  EXPECT_EQ(reverse_orbit(affine_quandle(5, 2), 0), affine_quandle(5, 3));
}

TEST(ReverseOrbit, PropertiesOnCorpus) {
  for (const auto& [name, q] : testing::small_corpus()) {
    for (const auto& block : orbits(q)) {
      const FiniteQuandle r = reverse_orbit(q, block.front());
      EXPECT_EQ(reverse_orbit(r, block.front()), q) << name;
      EXPECT_EQ(orbits(r), orbits(q)) << name;
      for (std::int64_t n : {2, 3, 4, 6}) {
        if (is_n_quandle(q, n)) EXPECT_TRUE(is_n_quandle(r, n)) << name << " n=" << n;
      }
    }
  }
}

TEST(IsMedial, Examples) {
  EXPECT_TRUE(is_medial(trivial_quandle(4)));
  EXPECT_TRUE(is_medial(FiniteQuandle(kDihedral3)));
  for (std::int64_t t : {2, 3, 4}) EXPECT_TRUE(is_medial(affine_quandle(5, t)));
  EXPECT_TRUE(is_medial(tetrahedral_quandle()));
}

TEST(IsMedial, NonMedialWitness) {
  const FiniteQuandle q = testing::transpositions_s4();
  const MedialCheck m = is_medial(q);
  ASSERT_FALSE(m.medial);
  const auto [w, x, y, z] = *m.witness;
  EXPECT_NE(q.op(q.op(w, x), q.op(y, z)), q.op(q.op(w, y), q.op(x, z)));
}

TEST(IsNQuandle, Examples) {
  EXPECT_TRUE(is_n_quandle(FiniteQuandle(kDihedral3), 2));
  EXPECT_FALSE(is_n_quandle(FiniteQuandle(kDihedral3), 3));
  EXPECT_TRUE(is_n_quandle(trivial_quandle(3), 1));
  EXPECT_FALSE(is_n_quandle(dihedral_quandle(3), 1));
  for (const auto& [name, q] : testing::small_corpus()) EXPECT_TRUE(is_n_quandle(q, 0)) << name;
  // Z_5 with t = 2: beta_y has order 4.
  EXPECT_TRUE(is_n_quandle(affine_quandle(5, 2), 4));
  EXPECT_FALSE(is_n_quandle(affine_quandle(5, 2), 2));
}

TEST(IsNQuandle, SymmetricInTheSignOfN) {
  for (const auto& [name, q] : testing::small_corpus()) {
    for (std::int64_t n = 1; n <= 6; ++n) {
      EXPECT_EQ(is_n_quandle(q, n), is_n_quandle(q, -n)) << name << " n=" << n;
    }
  }
}

TEST(TranslationPower, MatchesIteration) {
  const FiniteQuandle q = affine_quandle(5, 2);
  for (std::int64_t n : {-7, -1, 0, 1, 3, 9}) {
    const Table p = translation_power(q, n);
    for (Index x = 0; x < 5; ++x)
      for (Index y = 0; y < 5; ++y) {
        Index v = x;
        for (std::int64_t s = 0; s < (n < 0 ? -n : n); ++s) v = n < 0 ? q.op_inv(v, y) : q.op(v, y);
        EXPECT_EQ(p[x][y], v);
      }
  }
}

}  // namespace
}  // namespace quandle
