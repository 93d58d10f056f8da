// SPDX-License-Identifier: Apache-2.0

#include "quandle/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "quandle/constructions.hpp"
#include "quandle/table_io.hpp"
#include "support/corpus.hpp"

namespace quandle {
namespace {

namespace fs = std::filesystem;

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("quandle_cli_test_" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    fs::create_directories(p.parent_path());
    std::ofstream(p) << text;
    return p.string();
  }
  std::string write(const std::string& name, const FiniteQuandle& q) {
    return write(name, format_table(q.table()));
  }

  fs::path dir_;
};

TEST_F(CliTest, CheckDihedralIsMedial) {
  const auto file = write("d3.q", dihedral_quandle(3));
  const Result r = run({"check", file, "--medial"});
  EXPECT_EQ(r.status, 0) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "medial: yes"));
  EXPECT_EQ(run({"check", file, "--nquandle", "2"}).status, 0);
  EXPECT_EQ(run({"check", file, "--nquandle", "3"}).status, 1);
}

TEST_F(CliTest, CheckReportsBrokenIdempotence) {
  const auto file = write("bad.q", "quandle v1\nn=2\n2 1\n2 2\n");
  const Result r = run({"check", file, "--medial"});
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(contains(r.out, "idempotent: no"));
  EXPECT_TRUE(contains(r.out, "witness: idempotence at (1,1,1)"));
}

TEST_F(CliTest, CheckNonMedialPrintsWitness) {
  const auto file = write("s4.q", testing::transpositions_s4());
  const Result r = run({"check", file, "--medial"});
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(contains(r.out, "distributive: yes"));
  EXPECT_TRUE(contains(r.out, "medial: no witness ("));
}

TEST_F(CliTest, CheckMalformedRowIsAParseError) {
  const auto file = write("short.q", "quandle v1\nn=3\n1 3 2\n3 2\n2 1 3\n");
  const Result r = run({"check", file});
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.err, "line 4"));
  EXPECT_EQ(run({"check", (dir_ / "missing.q").string()}).status, 2);
}

TEST_F(CliTest, Orbits) {
  const auto file = write("d4.q", dihedral_quandle(4));
  const Result r = run({"orbits", file});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "orbit 1: 1 3\norbit 2: 2 4\n");
}

TEST_F(CliTest, ReverseDihedralAndTrivialAreUnchanged) {
  for (const auto& q : {dihedral_quandle(3), trivial_quandle(3)}) {
    const auto file = write("q.q", q);
    for (const char* e : {"1", "2", "3"}) {
      const Result r = run({"reverse", file, "--element", e});
      EXPECT_EQ(r.status, 0);
      EXPECT_EQ(r.out, format_table(q.table()));
    }
  }
}

TEST_F(CliTest, ReverseTwiceReproducesTheInput) {
  for (const auto& [name, q] : testing::small_corpus()) {
    const auto file = write("in.q", "# comment\n" + format_table(q.table()));
    const auto once = (dir_ / "once.q").string();
    const auto twice = (dir_ / "twice.q").string();
    ASSERT_EQ(run({"reverse", file, "--element", "1", "-o", once}).status, 0);
    ASSERT_EQ(run({"reverse", once, "--element", "1", "-o", twice}).status, 0);
    EXPECT_EQ(slurp(twice), format_table(q.table())) << name;
  }
}

TEST_F(CliTest, ReverseIndexOutOfRange) {
  const auto file = write("d3.q", dihedral_quandle(3));
  const Result r = run({"reverse", file, "--element", "4"});
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.err, "IndexOutOfRange"));
  EXPECT_EQ(run({"reverse", file, "--element", "0"}).status, 2);
}

TEST_F(CliTest, QuotientOfMedialInputIsIdentity) {
  const auto file = write("a5.q", affine_quandle(5, 2));
  const Result r = run({"quotient", file, "--variety", "medial"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "1 -> 1\n2 -> 2\n3 -> 3\n4 -> 4\n5 -> 5\n"));
  EXPECT_TRUE(contains(r.out, format_table(affine_quandle(5, 2).table())));
}

TEST_F(CliTest, QuotientExponentOneOnConnectedInputIsOneClass) {
  const auto file = write("d5.q", dihedral_quandle(5));
  const Result r = run({"quotient", file, "--variety", "nquandle", "--n", "1"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "1 -> 1\n2 -> 1\n3 -> 1\n4 -> 1\n5 -> 1\n"));
  EXPECT_TRUE(contains(r.out, "quandle v1\nn=1\n1\n"));
  EXPECT_EQ(run({"quotient", file, "--variety", "nquandle"}).status, 2);
  EXPECT_EQ(run({"quotient", file, "--variety", "abelian"}).status, 2);
}

TEST_F(CliTest, QuotientOutputPassesMedialCheck) {
  for (const auto& [name, q] : testing::small_corpus(5)) {
    const auto file = write("in.q", q);
    // Reversal makes some inputs non-medial; quotient those too.
    const auto rev = (dir_ / "rev.q").string();
    ASSERT_EQ(run({"reverse", file, "--element", std::to_string(q.size()), "-o", rev}).status, 0);
    const auto out = (dir_ / "out.q").string();
    ASSERT_EQ(run({"quotient", rev, "--variety", "medial", "-o", out}).status, 0);
    EXPECT_EQ(run({"check", out, "--medial"}).status, 0) << name;
  }
}

TEST_F(CliTest, VerifyPaper) {
  const Result r = run({"verify-paper"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "total classes: 2"));
  EXPECT_TRUE(contains(r.out, "lattice index: 1"));
  EXPECT_FALSE(contains(r.out, "c_w:"));

  const Result shown = run({"verify-paper", "--show-expansion"});
  EXPECT_EQ(shown.status, 0);
  for (const char* line : {"c0: (-1,0)", "c_w: (0,1)", "c_x: (1,-1)", "c_y: (1,0)", "c_z: (-1,1)"}) {
    EXPECT_TRUE(contains(shown.out, line)) << line;
  }

  const Result more = run({"verify-paper", "--samples", "500"});
  EXPECT_EQ(more.status, 0);
  EXPECT_TRUE(contains(more.out, "total classes: 2"));
  EXPECT_TRUE(contains(more.out, "coherence samples: 500"));

  EXPECT_EQ(run({"verify-paper", "--seed", "5"}).out, run({"verify-paper", "--seed", "5"}).out);
  EXPECT_EQ(run({"verify-paper", "--seed", "x"}).status, 2);
}

TEST_F(CliTest, DemoAffine) {
  EXPECT_EQ(run({"demo-affine", "--op", "(0,0)@1", "(0,0)@2"}).out, "(1,1)@1\n");
  EXPECT_EQ(run({"demo-affine", "--op", "(0,0)@1", "(0,0)@1"}).out, "(0,0)@1\n");
  EXPECT_EQ(run({"demo-affine", "--witness", "(0,0)", "1"}).out, "(-3,-2)@2\n");
  EXPECT_EQ(run({"demo-affine", "--witness", "0*t+0*t^2", "2"}).out, "(3,2)@1\n");
  EXPECT_EQ(run({"demo-affine", "--reversed", "--op", "(0,0)@1", "(0,0)@2"}).out, "(-2,-1)@1\n");
  EXPECT_EQ(run({"demo-affine", "--inverse", "--op", "(0,0)@1", "(0,0)@2"}).out, "(-2,-1)@1\n");
  EXPECT_EQ(run({"demo-affine", "--op", "(0,0)@3", "(0,0)@1"}).status, 2);
  EXPECT_EQ(run({"demo-affine", "--op", "zero@1", "(0,0)@1"}).status, 2);
  EXPECT_EQ(run({"demo-affine", "--witness", "(0,0)", "3"}).status, 2);
  EXPECT_EQ(run({"demo-affine"}).status, 2);
}

TEST_F(CliTest, ReversalExperimentOnDihedralCorpus) {
  write("corpus/d3.q", dihedral_quandle(3));
  write("corpus/d5.q", dihedral_quandle(5));
  const Result r = run({"reversal-experiment", (dir_ / "corpus").string()});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "d3.q 1 3 3 3 no\n"));
  EXPECT_TRUE(contains(r.out, "d5.q 1 5 5 5 no\n"));
  EXPECT_TRUE(contains(r.out, "size drops: 0\n"));
}

TEST_F(CliTest, ReversalExperimentMixedCorpus) {
  write("corpus/a_affine5.q", affine_quandle(5, 2));
  write("corpus/b_affine5_inv.q", affine_quandle(5, 3));
  write("corpus/c_broken.q", "quandle v1\nn=2\n2 1\n");
  write("corpus/d_notmedial.q", testing::transpositions_s4());
  const Result r = run({"reversal-experiment", (dir_ / "corpus").string()});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "a_affine5.q 1 5 5 5 no\n"));
  EXPECT_TRUE(contains(r.err, "skipping c_broken.q"));
  EXPECT_TRUE(contains(r.err, "skipping d_notmedial.q"));
  // Reversing Z_5 with t=2 gives exactly the t=3 table and vice versa.
  EXPECT_TRUE(contains(r.out, "collisions: 0\n"));
  // Rows are ordered by file name.
  EXPECT_LT(r.out.find("a_affine5.q"), r.out.find("b_affine5_inv.q"));
}

TEST_F(CliTest, ReversalExperimentEmptyAndMissing) {
  fs::create_directories(dir_ / "empty");
  const Result r = run({"reversal-experiment", (dir_ / "empty").string()});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "collisions: 0"));
  EXPECT_EQ(run({"reversal-experiment", (dir_ / "nope").string()}).status, 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"check"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
}

}  // namespace
}  // namespace quandle
