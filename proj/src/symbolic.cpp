#include "symchab/symbolic.hpp"

#include <algorithm>
#include <vector>

namespace symchab {

RatPoly::RatPoly(Rational c) { add_term({}, c); }

RatPoly RatPoly::monomial(Rational c, int g, int t, int r) {
  RatPoly p;
  p.add_term({g, t, r}, c);
  return p;
}

void RatPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational RatPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  RatPoly out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) out.add_term({m1.g + m2.g, m1.t + m2.t, m1.r + m2.r}, c1 * c2);
  }
  *this = std::move(out);
  return *this;
}

RatPoly RatPoly::scale(const Rational& c) const { return *this * RatPoly(c); }

Rational RatPoly::eval(const Rational& g, const Rational& t, const Rational& r) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < m.g; ++i) term *= g;
    for (int i = 0; i < m.t; ++i) term *= t;
    for (int i = 0; i < m.r; ++i) term *= r;
    sum += term;
  }
  return sum;
}

std::string monomial_name(const Monomial& m) {
  std::string s;
  auto part = [&](char v, int e) {
    if (e == 0) return;
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  part('g', m.g);
  part('t', m.t);
  part('r', m.r);
  return s.empty() ? "1" : s;
}

std::string RatPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> order(terms_.begin(), terms_.end());
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : order) {
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const bool unit = m.degree() > 0 && mag == 1;
    if (!unit) out += compact_rational(mag);
    if (m.degree() > 0) out += monomial_name(m);
  }
  return out;
}

RatPoly binom2(const RatPoly& x) { return (x * (x - RatPoly(1))).scale(Rational(1, 2)); }

RatPoly eliminate_t(const RatPoly& p) {
  RatPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (c > 0) {
      out += RatPoly::monomial(c, m.g + m.t, 0, m.r);
    } else if (m.t == 0) {
      out += RatPoly::monomial(c, m.g, 0, m.r);
    }
  }
  return out;
}

std::map<Monomial, Rational> coeff_diff(const RatPoly& p, const RatPoly& q) {
  return (p - q).terms();
}

}  // namespace symchab
