// SPDX-License-Identifier: Apache-2.0

#include "quandle/lattice.hpp"

#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"

namespace quandle {
namespace {

TEST(HnfClose, FullLattice) {
  const CollapseLattice l = hnf_close({NElem(0, 1), NElem(1, 1)});
  ASSERT_TRUE(l.index().has_value());
  EXPECT_EQ(*l.index(), 1);
  EXPECT_EQ(l.rank(), 2);
  EXPECT_TRUE(l.verify());
  // Oracle: small combinations of the generators reach both unit vectors.
  EXPECT_TRUE(testing::reachable({{0, 1}, {1, 1}}, {1, 0}));
  EXPECT_TRUE(testing::reachable({{0, 1}, {1, 1}}, {0, 1}));
}

TEST(HnfClose, DegenerateInputs) {
  const CollapseLattice empty = hnf_close({});
  EXPECT_FALSE(empty.index().has_value());
  EXPECT_EQ(empty.rank(), 0);
  EXPECT_TRUE(empty.contains(NElem{}));
  EXPECT_FALSE(empty.contains(NElem(1, 0)));

  const CollapseLattice line = hnf_close({NElem(2, 0)});
  EXPECT_FALSE(line.index().has_value());
  EXPECT_EQ(line.rank(), 1);
  EXPECT_TRUE(line.contains(NElem(-4, 0)));
  EXPECT_FALSE(line.contains(NElem(1, 0)));
  EXPECT_FALSE(line.contains(NElem(2, 1)));

  const CollapseLattice zeros = hnf_close({NElem{}, NElem{}});
  EXPECT_EQ(zeros.rank(), 0);
  EXPECT_TRUE(zeros.verify());
}

TEST(HnfClose, IndexIsAbsoluteDeterminantForTwoGenerators) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int k = 0; k < 300; ++k) {
    const int a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    const CollapseLattice l = hnf_close({NElem(a, b), NElem(c, e)});
    const int det = a * e - b * c;
    if (det == 0) {
      EXPECT_FALSE(l.index().has_value());
    } else {
      ASSERT_TRUE(l.index().has_value());
      EXPECT_EQ(*l.index(), std::abs(det));
    }
    EXPECT_TRUE(l.verify());
  }
}

TEST(HnfClose, CanonicalAndMembershipBothWays) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> d(-30, 30);
  std::uniform_int_distribution<int> count(0, 5);
  for (int k = 0; k < 300; ++k) {
    std::vector<NElem> gens;
    for (int m = count(rng); m > 0; --m) gens.emplace_back(d(rng), d(rng));
    const CollapseLattice l = hnf_close(gens);
    EXPECT_TRUE(l.verify());
    EXPECT_GE(l.h11(), 0);
    EXPECT_GE(l.h22(), 0);
    if (l.h11() > 0) {
      EXPECT_GE(l.h12(), 0);
      EXPECT_LT(l.h12(), l.h11());
    }
    for (const auto& g : gens) EXPECT_TRUE(l.contains(g));
    // The basis spans the same subgroup, so its HNF is the same.
    EXPECT_EQ(hnf_close(l.basis()), l);
    // Order of generators does not matter.
    std::vector<NElem> reversed(gens.rbegin(), gens.rend());
    EXPECT_EQ(hnf_close(reversed), l);
  }
}

TEST(HnfClose, LargeCoordinates) {
  const Integer big = Integer(1) << 200;
  const CollapseLattice l = hnf_close({NElem(big, 1), NElem(big + 1, 1)});
  ASSERT_TRUE(l.index().has_value());
  EXPECT_EQ(*l.index(), 1);
  EXPECT_TRUE(l.verify());
}

}  // namespace
}  // namespace quandle
