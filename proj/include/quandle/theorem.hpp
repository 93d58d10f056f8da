// SPDX-License-Identifier: Apache-2.0

#ifndef QUANDLE_THEOREM_HPP
#define QUANDLE_THEOREM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandle/affine.hpp"
#include "quandle/lattice.hpp"

namespace quandle {

// Machine check that the medial quotient of Q^rev(0_2) has two elements.
//
// Outline:
//  1. Expand (w_1 |> x_1) |> (y_1 |> z_2) in Q^rev(0_2) symbolically. The
//     medial identity in the quotient equates it with the same expression
//     with x and y exchanged.
//  2. Specialise w, x, y, z to affine expressions in a parameter a. Each
//     specialisation yields a_1 ~ (a + s)_1 for a fixed shift s.
//  3. The shifts span a subgroup of (N,+) = Z^2 (Hermite normal form). Index
//     1 means orbit 1 collapses to a single class.
//  4. Every x_2 is 0_2 |> y_1 with y_1 in orbit 1, and translations by orbit
//     1 are not reversed, so orbit 2 collapses too.
//  5. No operation moves an element across orbit tags, so the two classes
//     stay apart: two elements in total.

/// Error raised by one stage of the pipeline.
class TheoremError : public std::runtime_error {
 public:
  TheoremError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

class ExpansionMismatch : public TheoremError {
 public:
  explicit ExpansionMismatch(const std::string& what) : TheoremError("expansion", what) {}
};

class NonUniformRelation : public TheoremError {
 public:
  explicit NonUniformRelation(const std::string& what) : TheoremError("relation", what) {}
};

class WitnessFailure : public TheoremError {
 public:
  explicit WitnessFailure(const std::string& what) : TheoremError("orbit 2", what) {}
};

/// t^2 w + t^3 x - t + t y - t^3 z in orbit 1.
SymElem expected_lhs();

/// (w_1 |> x_1) |> (y_1 |> z_2) in Q^rev(0_2). Throws ExpansionMismatch
/// unless it equals expected_lhs().
SymElem expand_lhs();

/// (w_1 |> y_1) |> (x_1 |> z_2) in Q^rev(0_2), computed independently.
SymElem expand_rhs();

/// Values for w, x, y, z as affine expressions in the parameter "a".
using Assignment = std::map<std::string, AffineExpr>;

inline const std::string kParameter = "a";

/// Shift s with a_1 ~ (a + s)_1, read off LHS ~ RHS under the assignment.
///
/// Both sides have the form c + alpha*a. If they agree in alpha, the
/// relation reads p_1 ~ (p + s)_1 with p = c_lhs + alpha*a and
/// s = c_rhs - c_lhs. It holds for every p, not only for the values
/// alpha*a + c_lhs: z enters both sides only through the common term
/// -t^3 z and t^3 is a unit, so moving z translates both sides by any
/// element of N.
///
/// Throws NonUniformRelation if the a-coefficients differ, and
/// std::invalid_argument if the assignment leaves variables other than a.
NElem derive_relation(const Assignment& assignment);

struct NamedAssignment {
  std::string description;
  Assignment values;
};

/// w=x=1, y=0, z=-t^-3 a  and  w=x=0, y=t^-2, z=-t^-3 (a-1).
std::vector<NamedAssignment> collapse_assignments();

/// {s1, s2, s1 + s2, -(s1 + s2)}. With s1 = t^2 and s2 = -1 the last entry
/// is 1 - t^2 = t.
std::vector<NElem> combine_shifts(const NElem& s1, const NElem& s2);

/// Checks x_2 = 0_2 |> witness(x) with the witness in orbit 1, symbolically
/// and for sample_count random x, in Q^rev(0_2). Requires a lattice of index
/// 1 (std::invalid_argument otherwise); returns the number of orbit-2 classes
/// (always 1). Throws WitnessFailure.
int orbit2_collapse(const CollapseLattice& orbit1, std::size_t sample_count, std::mt19937_64& rng);

/// Uniform element of N with coordinates in [-bound, bound].
NElem random_nelem(std::mt19937_64& rng, std::int64_t bound = 1000000);

struct VerifyOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 0;
};

struct DerivedRelation {
  std::string description;
  NElem shift;
};

struct TheoremReport {
  SymElem lhs_expansion;
  SymElem rhs_expansion;
  std::size_t coherence_samples = 0;
  std::size_t shift_law_samples = 0;
  std::vector<DerivedRelation> relations;
  std::vector<NElem> relation_shifts;
  std::vector<NElem> shift_chain;
  CollapseLattice lattice;
  std::optional<Integer> lattice_index;  // nullopt: infinite
  bool orbit_tags_preserved = false;
  int orbit1_classes = 0;
  int orbit2_classes = 0;
  int total = 0;
  std::uint64_t seed = 0;
};

/// Runs every stage; throws TheoremError naming the stage that failed.
TheoremReport verify_theorem(const VerifyOptions& options = {});

/// Plain text, one record per line, sections in proof order.
std::string format_report(const TheoremReport& report, bool show_expansion);

}  // namespace quandle

#endif  // QUANDLE_THEOREM_HPP
