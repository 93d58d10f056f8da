// SPDX-License-Identifier: Apache-2.0

#include "quandle/theorem.hpp"

#include <sstream>

namespace quandle {

namespace {

SymElem var1(const std::string& name) { return SymElem::variable(name, OrbitTag::one); }

NElem t_power(std::int64_t k) { return scale_by_t_power(one(), k); }

// Both sides of the medial identity for the pattern (1,1,1,2) in Q^rev(0_2).
template <class E>
E medial_side(const E& w, const E& x, const E& y, const E& z) {
  return reversed_op(reversed_op(w, x), reversed_op(y, z));
}

}  // namespace

SymElem expected_lhs() {
  return {OrbitTag::one, AffineExpr(-t_elem(), {{"w", t_power(2)},
                                                {"x", t_power(3)},
                                                {"y", t_power(1)},
                                                {"z", -t_power(3)}})};
}

SymElem expand_lhs() {
  SymElem lhs = medial_side(var1("w"), var1("x"), var1("y"), SymElem::variable("z", OrbitTag::two));
  const SymElem expected = expected_lhs();
  if (!(lhs == expected)) {
    throw ExpansionMismatch("computed " + to_string(lhs) + ", expected " + to_string(expected));
  }
  return lhs;
}

SymElem expand_rhs() {
  return medial_side(var1("w"), var1("y"), var1("x"), SymElem::variable("z", OrbitTag::two));
}

NElem derive_relation(const Assignment& assignment) {
  const AffineExpr lhs = expand_lhs().expr.substitute(assignment);
  const AffineExpr rhs = expand_rhs().expr.substitute(assignment);
  for (const AffineExpr* side : {&lhs, &rhs}) {
    for (const auto& [name, c] : side->coefficients()) {
      if (name != kParameter) {
        throw std::invalid_argument("assignment leaves variable '" + name + "' free");
      }
    }
  }
  if (!(lhs.coefficient(kParameter) == rhs.coefficient(kParameter))) {
    throw NonUniformRelation("coefficients of " + kParameter + " differ: " +
                             to_string(lhs.coefficient(kParameter)) + " vs " +
                             to_string(rhs.coefficient(kParameter)));
  }
  return rhs.constant() - lhs.constant();
}

std::vector<NamedAssignment> collapse_assignments() {
  const AffineExpr a = AffineExpr::variable(kParameter);
  const NElem minus_t_inv3 = -t_power(-3);
  return {
      {"w=x=1, y=0, z=-t^-3*a",
       {{"w", one()}, {"x", one()}, {"y", NElem{}}, {"z", minus_t_inv3 * a}}},
      {"w=x=0, y=t^-2, z=-t^-3*(a-1)",
       {{"w", NElem{}}, {"x", NElem{}}, {"y", t_power(-2)}, {"z", minus_t_inv3 * (a - one())}}},
  };
}

std::vector<NElem> combine_shifts(const NElem& s1, const NElem& s2) {
  const NElem sum = s1 + s2;
  return {s1, s2, sum, -sum};
}

NElem random_nelem(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  const std::int64_t n1 = coord(rng);
  const std::int64_t n2 = coord(rng);
  return {n1, n2};
}

int orbit2_collapse(const CollapseLattice& orbit1, std::size_t sample_count, std::mt19937_64& rng) {
  if (orbit1.index() != Integer{1}) {
    throw std::invalid_argument("orbit 1 has not collapsed (lattice index is not 1)");
  }
  const SymElem base{OrbitTag::two, AffineExpr{}};

  const AffineExpr x = AffineExpr::variable("x");
  const SymElem witness = orbit_witness(x, OrbitTag::two);
  if (witness.orbit != OrbitTag::one) throw WitnessFailure("symbolic witness is not in orbit 1");
  if (!(reversed_op(base, witness) == SymElem{OrbitTag::two, x})) {
    throw WitnessFailure("0_2 |> witness(x) != x_2 symbolically");
  }

  const QElem zero2{OrbitTag::two, NElem{}};
  for (std::size_t k = 0; k < sample_count; ++k) {
    const NElem value = random_nelem(rng);
    const QElem y = orbit_witness(value, OrbitTag::two);
    const QElem expected{OrbitTag::two, value};
    if (y.orbit != OrbitTag::one || !(reversed_op(zero2, y) == expected) ||
        !(op(zero2, y) == expected)) {
      throw WitnessFailure("witness check failed for x = " + to_pair_string(value));
    }
  }
  return 1;
}

TheoremReport verify_theorem(const VerifyOptions& options) {
  TheoremReport report;
  report.seed = options.seed;
  std::mt19937_64 rng(options.seed);

  report.lhs_expansion = expand_lhs();
  report.rhs_expansion = expand_rhs();

  // Concrete evaluation agrees with the symbolic expansion.
  for (std::size_t k = 0; k < options.samples; ++k) {
    const std::map<std::string, NElem> values{{"w", random_nelem(rng)},
                                              {"x", random_nelem(rng)},
                                              {"y", random_nelem(rng)},
                                              {"z", random_nelem(rng)}};
    const QElem concrete = medial_side(QElem{OrbitTag::one, values.at("w")},
                                       QElem{OrbitTag::one, values.at("x")},
                                       QElem{OrbitTag::one, values.at("y")},
                                       QElem{OrbitTag::two, values.at("z")});
    if (!(concrete == report.lhs_expansion.evaluate(values))) {
      throw TheoremError("coherence", "concrete and symbolic LHS differ");
    }
  }
  report.coherence_samples = options.samples;

  // LHS - RHS = (t^3 - t)(x - y) for all w, x, y, z.
  const NElem t3_minus_t = t_power(3) - t_power(1);
  for (std::size_t k = 0; k < options.samples; ++k) {
    const QElem w{OrbitTag::one, random_nelem(rng)};
    const QElem x{OrbitTag::one, random_nelem(rng)};
    const QElem y{OrbitTag::one, random_nelem(rng)};
    const QElem z{OrbitTag::two, random_nelem(rng)};
    const NElem diff = medial_side(w, x, y, z).value - medial_side(w, y, x, z).value;
    if (!(diff == t3_minus_t * (x.value - y.value))) {
      throw TheoremError("shift law", "LHS - RHS != (t^3 - t)(x - y)");
    }
  }
  report.shift_law_samples = options.samples;

  for (const auto& named : collapse_assignments()) {
    const NElem s = derive_relation(named.values);
    report.relations.push_back({named.description, s});
    report.relation_shifts.push_back(s);
  }

  report.shift_chain = combine_shifts(report.relation_shifts.at(0), report.relation_shifts.at(1));
  report.lattice = hnf_close(report.relation_shifts);
  if (!report.lattice.verify()) throw TheoremError("lattice", "HNF does not span the generators");
  if (!(hnf_close(report.shift_chain) == report.lattice)) {
    throw TheoremError("lattice", "shift chain spans a different subgroup");
  }
  report.lattice_index = report.lattice.index();
  if (report.lattice_index != Integer{1}) {
    throw TheoremError("lattice", "relation shifts do not span N");
  }
  report.orbit1_classes = 1;

  // Orbit tags are preserved by the reversed operation and its inverse, so
  // no relation ever identifies an orbit-1 class with an orbit-2 class.
  report.orbit_tags_preserved = true;
  for (OrbitTag a : {OrbitTag::one, OrbitTag::two}) {
    for (OrbitTag b : {OrbitTag::one, OrbitTag::two}) {
      const SymElem u = SymElem::variable("u", a);
      const SymElem v = SymElem::variable("v", b);
      const auto& q = reversed_quandle();
      report.orbit_tags_preserved = report.orbit_tags_preserved && q.op(u, v).orbit == a &&
                                    q.op_inv(u, v).orbit == a;
    }
  }
  if (!report.orbit_tags_preserved) throw TheoremError("orbit tags", "an operation changed a tag");

  report.orbit2_classes = orbit2_collapse(report.lattice, options.samples, rng);
  report.total = report.orbit1_classes + report.orbit2_classes;
  return report;
}

std::string format_report(const TheoremReport& r, bool show_expansion) {
  std::ostringstream os;
  os << "== medial quotient of Q^rev(0_2)\n";
  os << "seed: " << r.seed << '\n';

  os << "-- expansion of (w_1 |> x_1) |> (y_1 |> z_2)\n";
  os << "lhs: " << to_string(r.lhs_expansion) << '\n';
  os << "rhs: " << to_string(r.rhs_expansion) << '\n';
  if (show_expansion) {
    os << "c0: " << to_pair_string(r.lhs_expansion.expr.constant()) << '\n';
    for (const char* v : {"w", "x", "y", "z"}) {
      os << "c_" << v << ": " << to_pair_string(r.lhs_expansion.expr.coefficient(v)) << '\n';
    }
  }
  os << "coherence samples: " << r.coherence_samples << " ok\n";
  os << "shift law (t^3-t)(x-y) samples: " << r.shift_law_samples << " ok\n";

  os << "-- relations in orbit 1\n";
  for (const auto& rel : r.relations) {
    os << "relation [" << rel.description << "]: a_1 ~ (a + " << to_pair_string(rel.shift)
       << ")_1\n";
  }
  os << "shift chain:";
  for (const auto& s : r.shift_chain) os << ' ' << to_pair_string(s);
  os << '\n';

  os << "-- lattice\n";
  os << "hnf: [[" << r.lattice.h11() << ", " << r.lattice.h12() << "], [0, " << r.lattice.h22()
     << "]]\n";
  os << "lattice index: ";
  if (r.lattice_index) {
    os << *r.lattice_index << '\n';
  } else {
    os << "infinite\n";
  }
  os << "orbit 1 classes: " << r.orbit1_classes << '\n';

  os << "-- orbit 2\n";
  os << "orbit tags preserved: " << (r.orbit_tags_preserved ? "yes" : "no") << '\n';
  os << "orbit 2 classes: " << r.orbit2_classes << '\n';

  os << "-- result\n";
  os << "total classes: " << r.total << '\n';
  return os.str();
}

}  // namespace quandle
