// SPDX-License-Identifier: Apache-2.0

#ifndef QUANDLE_AFFINE_HPP
#define QUANDLE_AFFINE_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/ring_n.hpp"

namespace quandle {

// The medial quandle Q = Q1 u Q2 on two copies of N:
//
//   x_i |> y_j      = (m_j - m_i + t x + (1 - t) y)_i
//   x_i |>^-1 y_j   = (t^-1 (m_i - m_j + x - (1 - t) y))_i
//
// with m_1 = 0 and m_2 = 1. In N, 1 - t = t^2. Both formulas are affine in
// x and y and never change the orbit tag of the left argument.

enum class OrbitTag { one = 1, two = 2 };

inline int index(OrbitTag o) noexcept { return static_cast<int>(o); }
inline OrbitTag other(OrbitTag o) noexcept {
  return o == OrbitTag::one ? OrbitTag::two : OrbitTag::one;
}

/// m_1 = 0, m_2 = 1.
NElem orbit_offset(OrbitTag o);

struct QElem {
  OrbitTag orbit = OrbitTag::one;
  NElem value;

  friend bool operator==(const QElem&, const QElem&) = default;
};

/// c0 + sum_v c_v * v with coefficients in N. Zero coefficients are dropped.
class AffineExpr {
 public:
  using Coefficients = std::map<std::string, NElem>;

  AffineExpr() = default;
  AffineExpr(NElem constant) : constant_(std::move(constant)) {}  // NOLINT: implicit by intent
  AffineExpr(NElem constant, Coefficients coefficients);

  static AffineExpr variable(const std::string& name, NElem coefficient = one());

  const NElem& constant() const noexcept { return constant_; }
  const Coefficients& coefficients() const noexcept { return coefficients_; }
  NElem coefficient(const std::string& name) const;
  bool is_zero() const noexcept { return constant_.is_zero() && coefficients_.empty(); }

  AffineExpr& operator+=(const AffineExpr& rhs);
  AffineExpr& operator-=(const AffineExpr& rhs);
  friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
  friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a -= b; }
  friend AffineExpr operator-(const AffineExpr& a);
  friend AffineExpr operator*(const NElem& c, const AffineExpr& e);
  friend bool operator==(const AffineExpr&, const AffineExpr&) = default;

  /// Evaluates with every variable bound; throws std::out_of_range for an
  /// unbound variable.
  NElem evaluate(const std::map<std::string, NElem>& values) const;

  /// Replaces bound variables by expressions; unbound ones are kept.
  AffineExpr substitute(const std::map<std::string, AffineExpr>& values) const;

 private:
  void add_coefficient(const std::string& name, const NElem& c);

  NElem constant_;
  Coefficients coefficients_;
};

/// t^k * e, coefficientwise.
AffineExpr scale_by_t_power(const AffineExpr& e, std::int64_t k);

struct SymElem {
  OrbitTag orbit = OrbitTag::one;
  AffineExpr expr;

  static SymElem variable(const std::string& name, OrbitTag orbit) {
    return {orbit, AffineExpr::variable(name)};
  }

  QElem evaluate(const std::map<std::string, NElem>& values) const {
    return {orbit, expr.evaluate(values)};
  }

  friend bool operator==(const SymElem&, const SymElem&) = default;
};

QElem op(const QElem& a, const QElem& b);
QElem op_inv(const QElem& a, const QElem& b);
SymElem sym_op(const SymElem& a, const SymElem& b);
SymElem sym_op_inv(const SymElem& a, const SymElem& b);

/// Q with the translations of some orbits inverted. Since each orbit of Q is
/// exactly one of Q1, Q2, reversing the orbit of an element only depends on
/// its tag. Reversing the same orbit twice gives back the original.
class TwoOrbitQuandle {
 public:
  TwoOrbitQuandle() = default;

  TwoOrbitQuandle reversed_at(OrbitTag o) const;
  bool is_reversed(OrbitTag o) const noexcept { return reversed_[index(o) - 1]; }

  QElem op(const QElem& a, const QElem& b) const;
  QElem op_inv(const QElem& a, const QElem& b) const;
  SymElem op(const SymElem& a, const SymElem& b) const;
  SymElem op_inv(const SymElem& a, const SymElem& b) const;

 private:
  bool reversed_[2] = {false, false};
};

/// Q^rev(0_2): translations by elements of Q2 inverted.
const TwoOrbitQuandle& reversed_quandle();

QElem reversed_op(const QElem& a, const QElem& b);
SymElem reversed_op(const SymElem& a, const SymElem& b);

/// The element y of the other orbit with 0_i |> y = x_i:
///   i = 1:  y = (t^-2 (x - 1))_2
///   i = 2:  y = (t^-2 (x + 1))_1
QElem orbit_witness(const NElem& x, OrbitTag i);
SymElem orbit_witness(const AffineExpr& x, OrbitTag i);

enum class AxiomMode { plain, reversed };

struct Counterexample {
  std::map<std::string, QElem> assignment;
  QElem lhs;
  QElem rhs;
};

/// One law checked as an identity of affine expressions for one choice of
/// orbit tags of its variables.
struct SymbolicCase {
  std::string law;  // idempotence, inverse, distributivity, mediality
  std::vector<OrbitTag> pattern;
  bool holds = false;
  std::optional<Counterexample> counterexample;
};

struct SymbolicAxiomReport {
  AxiomMode mode = AxiomMode::plain;
  std::vector<SymbolicCase> cases;

  std::vector<const SymbolicCase*> cases_for(std::string_view law) const;
  bool all_hold(std::string_view law) const;
  bool quandle_axioms_hold() const;
};

/// Checks idempotence (2 cases), the inverse law (4), right
/// self-distributivity (8) and mediality (16) over every tag pattern. Each
/// failing case carries a concrete substitution that confirms it.
SymbolicAxiomReport check_axioms_symbolic(AxiomMode mode);

/// "(n1,n2)@i".
std::string to_string(const QElem& a);
/// "orbit i: c0 + c_v*v + ..." with coefficients in n1*t+n2*t^2 form.
std::string to_string(const SymElem& a);
std::string to_string(const AffineExpr& e);

/// Parses "(n1,n2)@i" (any parse_nelem form before the '@').
QElem parse_qelem(std::string_view text);

}  // namespace quandle

#endif  // QUANDLE_AFFINE_HPP
