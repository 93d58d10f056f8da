// SPDX-License-Identifier: Apache-2.0

#ifndef QUANDLE_RING_N_HPP
#define QUANDLE_RING_N_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace quandle {

using Integer = boost::multiprecision::cpp_int;

/// Laurent polynomial in one variable t with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored; the zero polynomial is
/// the empty map.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Terms = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms);

  static LaurentPoly monomial(Integer coefficient, Exponent exponent);
  static LaurentPoly constant(Integer c) { return monomial(std::move(c), 0); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(Exponent e) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(Exponent e, const Integer& c);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Element of N = Z[t,t^-1]/(t^2+t-1) in its unique form n1*t + n2*t^2.
///
/// (N,+) is free abelian on {t, t^2}, so equality of the two integer
/// coordinates is equality in N.
class NElem {
 public:
  NElem() = default;
  NElem(Integer n1, Integer n2) : n1_(std::move(n1)), n2_(std::move(n2)) {}

  const Integer& n1() const noexcept { return n1_; }
  const Integer& n2() const noexcept { return n2_; }
  bool is_zero() const noexcept { return n1_ == 0 && n2_ == 0; }

  NElem& operator+=(const NElem& rhs);
  NElem& operator-=(const NElem& rhs);

  friend NElem operator+(NElem a, const NElem& b) { return a += b; }
  friend NElem operator-(NElem a, const NElem& b) { return a -= b; }
  friend NElem operator-(const NElem& a) { return {-a.n1_, -a.n2_}; }
  friend NElem operator*(const NElem& a, const NElem& b);
  friend bool operator==(const NElem&, const NElem&) = default;

 private:
  Integer n1_{0};
  Integer n2_{0};
};

/// Canonical representative of p modulo t^2+t-1.
///
/// Rewrites with t^2 -> 1 - t (from the top) and t^-1 -> 1 + t (from the
/// bottom) until p = a + b*t, then uses 1 = t + t^2 to land on
/// (n1, n2) = (a + b, a).
NElem reduce(const LaurentPoly& p);

/// n1*t + n2*t^2 as a Laurent polynomial.
LaurentPoly lift(const NElem& a);

NElem add(const NElem& a, const NElem& b);
NElem neg(const NElem& a);
NElem mul(const NElem& a, const NElem& b);

/// t^k * a for any integer k; t is a unit with inverse 1 + t.
NElem scale_by_t_power(const NElem& a, std::int64_t k);

/// The coset of the integer c, i.e. (c, c) since 1 = t + t^2.
NElem from_int(const Integer& c);

/// Handy constants: t, t^2 and 1 in canonical form.
NElem t_elem();
NElem t_squared();
NElem one();

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Renders "n1*t+n2*t^2"; the sign between the terms is always written.
std::string to_string(const NElem& a);

/// Renders "(n1,n2)".
std::string to_pair_string(const NElem& a);

/// Accepts "n1*t+n2*t^2" (as printed by to_string), the pair form
/// "(n1,n2)", or a bare integer c meaning from_int(c). Whitespace is
/// ignored. Throws ParseError.
NElem parse_nelem(std::string_view text);

std::ostream& operator<<(std::ostream& os, const NElem& a);

}  // namespace quandle

#endif  // QUANDLE_RING_N_HPP
