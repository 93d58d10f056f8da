// SPDX-License-Identifier: Apache-2.0

#include "quandle/ring_n.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

namespace quandle {

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms) {
    if (c != 0) terms_.emplace(e, std::move(c));
  }
}

LaurentPoly LaurentPoly::monomial(Integer coefficient, Exponent exponent) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

Integer LaurentPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer{0} : it->second;
}

void LaurentPoly::add_term(Exponent e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first || c < 0) os << (c < 0 ? "-" : "+");
    os << abs(c) << "*t^" << e;
    first = false;
  }
  return os;
}

NElem& NElem::operator+=(const NElem& rhs) {
  n1_ += rhs.n1_;
  n2_ += rhs.n2_;
  return *this;
}

NElem& NElem::operator-=(const NElem& rhs) {
  n1_ -= rhs.n1_;
  n2_ -= rhs.n2_;
  return *this;
}

NElem operator*(const NElem& a, const NElem& b) { return reduce(lift(a) * lift(b)); }

NElem reduce(const LaurentPoly& p) {
  std::map<LaurentPoly::Exponent, Integer> work = p.terms();
  auto bump = [&work](LaurentPoly::Exponent e, const Integer& c) {
    auto& slot = work[e];
    slot += c;
    if (slot == 0) work.erase(e);
  };

  // t^e = t^(e-2) - t^(e-1) for e >= 2.
  while (!work.empty() && work.rbegin()->first > 1) {
    auto top = std::prev(work.end());
    const auto e = top->first;
    const Integer c = top->second;
    work.erase(top);
    bump(e - 2, c);
    bump(e - 1, -c);
  }
  // t^e = t^(e+1) + t^(e+2) for e <= -1.
  while (!work.empty() && work.begin()->first < 0) {
    auto bottom = work.begin();
    const auto e = bottom->first;
    const Integer c = bottom->second;
    work.erase(bottom);
    bump(e + 1, c);
    bump(e + 2, c);
  }

  const Integer a = work.count(0) ? work[0] : Integer{0};
  const Integer b = work.count(1) ? work[1] : Integer{0};
  return {a + b, a};
}

LaurentPoly lift(const NElem& a) {
  return LaurentPoly::monomial(a.n1(), 1) + LaurentPoly::monomial(a.n2(), 2);
}

NElem add(const NElem& a, const NElem& b) { return a + b; }
NElem neg(const NElem& a) { return -a; }
NElem mul(const NElem& a, const NElem& b) { return a * b; }

NElem scale_by_t_power(const NElem& a, std::int64_t k) {
  Integer n1 = a.n1();
  Integer n2 = a.n2();
  // (n1 t + n2 t^2) * t   = n2 t + (n1 - n2) t^2
  // (n1 t + n2 t^2) * t^-1 = (n1 + n2) t + n1 t^2
  for (; k > 0; --k) {
    Integer next1 = n2;
    n2 = n1 - n2;
    n1 = std::move(next1);
  }
  for (; k < 0; ++k) {
    Integer next1 = n1 + n2;
    n2 = n1;
    n1 = std::move(next1);
  }
  return {std::move(n1), std::move(n2)};
}

NElem from_int(const Integer& c) { return {c, c}; }

NElem t_elem() { return {1, 0}; }
NElem t_squared() { return {0, 1}; }
NElem one() { return from_int(1); }

std::string to_string(const NElem& a) {
  std::ostringstream os;
  os << a.n1() << "*t" << (a.n2() < 0 ? "-" : "+") << abs(a.n2()) << "*t^2";
  return os.str();
}

std::string to_pair_string(const NElem& a) {
  std::ostringstream os;
  os << '(' << a.n1() << ',' << a.n2() << ')';
  return os.str();
}

namespace {

Integer parse_integer(std::string s) {
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  return Integer(s);
}

}  // namespace

NElem parse_nelem(std::string_view text) {
  std::string s;
  std::copy_if(text.begin(), text.end(), std::back_inserter(s),
               [](unsigned char ch) { return !std::isspace(ch); });

  static const std::regex poly_form(R"(^([+-]?\d+)\*t([+-]\d+)\*t\^2$)");
  static const std::regex pair_form(R"(^\(([+-]?\d+),([+-]?\d+)\)$)");
  static const std::regex int_form(R"(^[+-]?\d+$)");

  std::smatch m;
  if (std::regex_match(s, m, poly_form) || std::regex_match(s, m, pair_form)) {
    return {parse_integer(m[1].str()), parse_integer(m[2].str())};
  }
  if (std::regex_match(s, int_form)) return from_int(parse_integer(s));
  throw ParseError("not an element of N: '" + std::string(text) + "'");
}

std::ostream& operator<<(std::ostream& os, const NElem& a) { return os << to_string(a); }

}  // namespace quandle
