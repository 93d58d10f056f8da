// SPDX-License-Identifier: Apache-2.0

#include "quandle/affine.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace quandle {

NElem orbit_offset(OrbitTag o) { return o == OrbitTag::one ? NElem{} : one(); }

AffineExpr::AffineExpr(NElem constant, Coefficients coefficients) : constant_(std::move(constant)) {
  for (const auto& [name, c] : coefficients) add_coefficient(name, c);
}

AffineExpr AffineExpr::variable(const std::string& name, NElem coefficient) {
  AffineExpr e;
  e.add_coefficient(name, coefficient);
  return e;
}

NElem AffineExpr::coefficient(const std::string& name) const {
  auto it = coefficients_.find(name);
  return it == coefficients_.end() ? NElem{} : it->second;
}

void AffineExpr::add_coefficient(const std::string& name, const NElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coefficients_.try_emplace(name, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coefficients_.erase(it);
  }
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& rhs) {
  constant_ += rhs.constant_;
  for (const auto& [name, c] : rhs.coefficients_) add_coefficient(name, c);
  return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& rhs) { return *this += -rhs; }

AffineExpr operator-(const AffineExpr& a) {
  AffineExpr r(-a.constant_);
  for (const auto& [name, c] : a.coefficients_) r.coefficients_.emplace(name, -c);
  return r;
}

AffineExpr operator*(const NElem& c, const AffineExpr& e) {
  AffineExpr r(c * e.constant_);
  for (const auto& [name, k] : e.coefficients_) r.add_coefficient(name, c * k);
  return r;
}

NElem AffineExpr::evaluate(const std::map<std::string, NElem>& values) const {
  NElem out = constant_;
  for (const auto& [name, c] : coefficients_) {
    auto it = values.find(name);
    if (it == values.end()) throw std::out_of_range("unbound variable '" + name + "'");
    out += c * it->second;
  }
  return out;
}

AffineExpr AffineExpr::substitute(const std::map<std::string, AffineExpr>& values) const {
  AffineExpr out(constant_);
  for (const auto& [name, c] : coefficients_) {
    auto it = values.find(name);
    out += it == values.end() ? variable(name, c) : c * it->second;
  }
  return out;
}

AffineExpr scale_by_t_power(const AffineExpr& e, std::int64_t k) {
  AffineExpr::Coefficients scaled;
  for (const auto& [name, c] : e.coefficients()) scaled.emplace(name, scale_by_t_power(c, k));
  return {scale_by_t_power(e.constant(), k), std::move(scaled)};
}

namespace {

// x_i |> y_j with V either NElem or AffineExpr.
template <class V>
V forward(OrbitTag i, const V& x, OrbitTag j, const V& y) {
  return V(orbit_offset(j) - orbit_offset(i)) + scale_by_t_power(x, 1) + scale_by_t_power(y, 2);
}

template <class V>
V backward(OrbitTag i, const V& x, OrbitTag j, const V& y) {
  return scale_by_t_power(V(orbit_offset(i) - orbit_offset(j)) + x - scale_by_t_power(y, 2), -1);
}

}  // namespace

QElem op(const QElem& a, const QElem& b) {
  return {a.orbit, forward(a.orbit, a.value, b.orbit, b.value)};
}

QElem op_inv(const QElem& a, const QElem& b) {
  return {a.orbit, backward(a.orbit, a.value, b.orbit, b.value)};
}

SymElem sym_op(const SymElem& a, const SymElem& b) {
  return {a.orbit, forward(a.orbit, a.expr, b.orbit, b.expr)};
}

SymElem sym_op_inv(const SymElem& a, const SymElem& b) {
  return {a.orbit, backward(a.orbit, a.expr, b.orbit, b.expr)};
}

TwoOrbitQuandle TwoOrbitQuandle::reversed_at(OrbitTag o) const {
  TwoOrbitQuandle r = *this;
  r.reversed_[index(o) - 1] = !r.reversed_[index(o) - 1];
  return r;
}

QElem TwoOrbitQuandle::op(const QElem& a, const QElem& b) const {
  return is_reversed(b.orbit) ? quandle::op_inv(a, b) : quandle::op(a, b);
}

QElem TwoOrbitQuandle::op_inv(const QElem& a, const QElem& b) const {
  return is_reversed(b.orbit) ? quandle::op(a, b) : quandle::op_inv(a, b);
}

SymElem TwoOrbitQuandle::op(const SymElem& a, const SymElem& b) const {
  return is_reversed(b.orbit) ? sym_op_inv(a, b) : sym_op(a, b);
}

SymElem TwoOrbitQuandle::op_inv(const SymElem& a, const SymElem& b) const {
  return is_reversed(b.orbit) ? sym_op(a, b) : sym_op_inv(a, b);
}

const TwoOrbitQuandle& reversed_quandle() {
  static const TwoOrbitQuandle q = TwoOrbitQuandle{}.reversed_at(OrbitTag::two);
  return q;
}

QElem reversed_op(const QElem& a, const QElem& b) { return reversed_quandle().op(a, b); }
SymElem reversed_op(const SymElem& a, const SymElem& b) { return reversed_quandle().op(a, b); }

QElem orbit_witness(const NElem& x, OrbitTag i) {
  const NElem shift = i == OrbitTag::one ? -one() : one();
  return {other(i), scale_by_t_power(x + shift, -2)};
}

SymElem orbit_witness(const AffineExpr& x, OrbitTag i) {
  const NElem shift = i == OrbitTag::one ? -one() : one();
  return {other(i), scale_by_t_power(x + AffineExpr(shift), -2)};
}

// ---------------------------------------------------------------------------
// Symbolic axiom checks

std::vector<const SymbolicCase*> SymbolicAxiomReport::cases_for(std::string_view law) const {
  std::vector<const SymbolicCase*> out;
  for (const auto& c : cases)
    if (c.law == law) out.push_back(&c);
  return out;
}

bool SymbolicAxiomReport::all_hold(std::string_view law) const {
  const auto selected = cases_for(law);
  return !selected.empty() &&
         std::all_of(selected.begin(), selected.end(), [](const auto* c) { return c->holds; });
}

bool SymbolicAxiomReport::quandle_axioms_hold() const {
  return all_hold("idempotence") && all_hold("inverse") && all_hold("distributivity");
}

namespace {

struct Law {
  std::string name;
  std::vector<std::string> variables;
};

const std::vector<Law>& laws() {
  static const std::vector<Law> all = {
      {"idempotence", {"x"}},
      {"inverse", {"x", "y"}},
      {"distributivity", {"x", "y", "z"}},
      {"mediality", {"w", "x", "y", "z"}},
  };
  return all;
}

// Both sides of every equation a law asserts, for either element kind.
template <class E>
std::vector<std::pair<E, E>> sides(const TwoOrbitQuandle& q, const std::string& law,
                                   const std::vector<E>& v) {
  if (law == "idempotence") return {{q.op(v[0], v[0]), v[0]}};
  if (law == "inverse") {
    return {{q.op(q.op_inv(v[0], v[1]), v[1]), v[0]}, {q.op_inv(q.op(v[0], v[1]), v[1]), v[0]}};
  }
  if (law == "distributivity") {
    return {{q.op(q.op(v[0], v[1]), v[2]), q.op(q.op(v[0], v[2]), q.op(v[1], v[2]))}};
  }
  return {{q.op(q.op(v[0], v[1]), q.op(v[2], v[3])), q.op(q.op(v[0], v[2]), q.op(v[1], v[3]))}};
}

std::vector<std::vector<OrbitTag>> patterns(std::size_t arity) {
  std::vector<std::vector<OrbitTag>> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << arity); ++bits) {
    std::vector<OrbitTag> p(arity);
    for (std::size_t k = 0; k < arity; ++k) {
      p[k] = (bits >> (arity - 1 - k)) & 1 ? OrbitTag::two : OrbitTag::one;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::optional<Counterexample> find_counterexample(const TwoOrbitQuandle& q, const Law& law,
                                                  const std::vector<OrbitTag>& pattern) {
  // Candidates: everything zero, then one variable set to 1. An affine
  // difference that is not identically zero is nonzero at one of these.
  std::vector<std::vector<NElem>> candidates(1, std::vector<NElem>(pattern.size()));
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    candidates.emplace_back(pattern.size());
    candidates.back()[k] = one();
  }
  for (const auto& values : candidates) {
    std::vector<QElem> args;
    std::map<std::string, QElem> assignment;
    for (std::size_t k = 0; k < pattern.size(); ++k) {
      args.push_back({pattern[k], values[k]});
      assignment.emplace(law.variables[k], args.back());
    }
    for (const auto& [lhs, rhs] : sides(q, law.name, args)) {
      if (!(lhs == rhs)) return Counterexample{assignment, lhs, rhs};
    }
  }
  return std::nullopt;
}

}  // namespace

SymbolicAxiomReport check_axioms_symbolic(AxiomMode mode) {
  const TwoOrbitQuandle q = mode == AxiomMode::plain ? TwoOrbitQuandle{} : reversed_quandle();
  SymbolicAxiomReport report{mode, {}};
  for (const Law& law : laws()) {
    for (const auto& pattern : patterns(law.variables.size())) {
      std::vector<SymElem> vars;
      for (std::size_t k = 0; k < pattern.size(); ++k) {
        vars.push_back(SymElem::variable(law.variables[k], pattern[k]));
      }
      SymbolicCase c{law.name, pattern, true, std::nullopt};
      for (const auto& [lhs, rhs] : sides(q, law.name, vars)) c.holds = c.holds && lhs == rhs;
      if (!c.holds) {
        c.counterexample = find_counterexample(q, law, pattern);
        if (!c.counterexample) {
          throw std::logic_error("symbolic failure of " + law.name + " has no concrete witness");
        }
      }
      report.cases.push_back(std::move(c));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Text forms

std::string to_string(const QElem& a) {
  return to_pair_string(a.value) + "@" + std::to_string(index(a.orbit));
}

std::string to_string(const AffineExpr& e) {
  std::ostringstream os;
  os << '(' << to_string(e.constant()) << ')';
  for (const auto& [name, c] : e.coefficients()) os << " + (" << to_string(c) << ")*" << name;
  return os.str();
}

std::string to_string(const SymElem& a) {
  return "orbit " + std::to_string(index(a.orbit)) + ": " + to_string(a.expr);
}

QElem parse_qelem(std::string_view text) {
  const auto at = text.rfind('@');
  if (at == std::string_view::npos) {
    throw ParseError("expected '<element>@<orbit>', got '" + std::string(text) + "'");
  }
  std::string tag(text.substr(at + 1));
  tag.erase(std::remove_if(tag.begin(), tag.end(), [](unsigned char c) { return std::isspace(c); }),
            tag.end());
  if (tag != "1" && tag != "2") throw ParseError("orbit tag must be 1 or 2, got '" + tag + "'");
  return {tag == "1" ? OrbitTag::one : OrbitTag::two, parse_nelem(text.substr(0, at))};
}

}  // namespace quandle
