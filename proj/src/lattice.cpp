// SPDX-License-Identifier: Apache-2.0

#include "quandle/lattice.hpp"

#include <tuple>

namespace quandle {

namespace {

// Vector in Z^2 with its coefficients over the generator list.
struct Tracked {
  Integer a{0}, b{0};
  std::vector<Integer> coeffs;

  Tracked combine(const Integer& s, const Tracked& o, const Integer& u) const {
    Tracked r{s * a + u * o.a, s * b + u * o.b, coeffs};
    for (std::size_t k = 0; k < coeffs.size(); ++k) r.coeffs[k] = s * coeffs[k] + u * o.coeffs[k];
    return r;
  }
};

// g = s*x + u*y with g = gcd(x, y) >= 0.
std::tuple<Integer, Integer, Integer> extended_gcd(const Integer& x, const Integer& y) {
  Integer old_r = x, r = y, old_s = 1, s = 0, old_u = 0, u = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_u = std::exchange(u, old_u - q * u);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_u};
  return {old_r, old_s, old_u};
}

Integer floor_div(const Integer& x, const Integer& y) {
  Integer q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

}  // namespace

CollapseLattice CollapseLattice::close(std::vector<NElem> generators) {
  const std::size_t m = generators.size();
  Tracked bottom{0, 0, std::vector<Integer>(m, 0)};
  std::optional<Tracked> pivot;

  auto absorb_bottom = [&bottom](const Tracked& w) {
    if (w.a == 0) return;
    auto [g, s, u] = extended_gcd(bottom.a, w.a);
    bottom = bottom.combine(s, w, u);
  };

  for (std::size_t k = 0; k < m; ++k) {
    Tracked v{generators[k].n1(), generators[k].n2(), std::vector<Integer>(m, 0)};
    v.coeffs[k] = 1;
    if (v.b == 0) {
      absorb_bottom(v);
    } else if (!pivot) {
      pivot = std::move(v);
    } else {
      auto [g, s, u] = extended_gcd(pivot->b, v.b);
      const Tracked cleared = pivot->combine(v.b / g, v, -(pivot->b / g));
      pivot = pivot->combine(s, v, u);
      absorb_bottom(cleared);
    }
  }

  CollapseLattice out;
  out.generators_ = std::move(generators);
  if (bottom.a < 0) bottom = bottom.combine(-1, bottom, 0);
  if (pivot) {
    if (pivot->b < 0) pivot = pivot->combine(-1, *pivot, 0);
    if (bottom.a != 0) pivot = pivot->combine(1, bottom, -floor_div(pivot->a, bottom.a));
    out.h12_ = pivot->a;
    out.h22_ = pivot->b;
    out.cert_second_ = pivot->coeffs;
  } else {
    out.cert_second_.assign(m, 0);
  }
  out.h11_ = bottom.a;
  out.cert_first_ = bottom.coeffs;
  return out;
}

std::optional<Integer> CollapseLattice::index() const {
  if (rank() < 2) return std::nullopt;
  return h11_ * h22_;
}

std::vector<NElem> CollapseLattice::basis() const {
  std::vector<NElem> out;
  if (h11_ != 0) out.emplace_back(h11_, 0);
  if (h22_ != 0) out.emplace_back(h12_, h22_);
  return out;
}

bool CollapseLattice::contains(const NElem& v) const {
  Integer rest = v.n1();
  if (h22_ == 0) {
    if (v.n2() != 0) return false;
  } else {
    if (v.n2() % h22_ != 0) return false;
    rest -= (v.n2() / h22_) * h12_;
  }
  return h11_ == 0 ? rest == 0 : rest % h11_ == 0;
}

bool CollapseLattice::verify() const {
  for (const auto& g : generators_)
    if (!contains(g)) return false;
  auto combination = [this](const std::vector<Integer>& c) {
    NElem sum;
    for (std::size_t k = 0; k < generators_.size(); ++k)
      sum += NElem(c[k] * generators_[k].n1(), c[k] * generators_[k].n2());
    return sum;
  };
  return combination(cert_first_) == NElem(h11_, 0) &&
         combination(cert_second_) == NElem(h12_, h22_);
}

CollapseLattice hnf_close(const std::vector<NElem>& shifts) { return CollapseLattice::close(shifts); }

}  // namespace quandle
