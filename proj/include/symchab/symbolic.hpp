#pragma once

#include <compare>
#include <map>
#include <string>

#include "symchab/rational.hpp"

namespace symchab {

/// Exponents of g^deg_g t^deg_t r^deg_r.
struct Monomial {
  int g = 0;
  int t = 0;
  int r = 0;

  int degree() const { return g + t + r; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Polynomial in g, t, r with exact rational coefficients. Zero coefficients are
/// never stored, so structural equality is polynomial equality.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(Rational c);
  RatPoly(std::int64_t c) : RatPoly(Rational(c)) {}

  static RatPoly monomial(Rational c, int g, int t, int r);
  static RatPoly var_g() { return monomial(1, 1, 0, 0); }
  static RatPoly var_t() { return monomial(1, 0, 1, 0); }
  static RatPoly var_r() { return monomial(1, 0, 0, 1); }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const RatPoly& o);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator-(const RatPoly& a) { return RatPoly() - a; }
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

  RatPoly scale(const Rational& c) const;
  Rational eval(const Rational& g, const Rational& t, const Rational& r) const;

  /// Human-readable form, highest total degree first, e.g. "288g^4 + 1616/3g^3 - 4012/9".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// x (x - 1) / 2.
RatPoly binom2(const RatPoly& x);

/// Upper bound on 0 <= t <= g: positive terms take t = g, negative terms containing
/// t are dropped, t-free terms are kept. Dominates the input pointwise for g, r >= 0.
RatPoly eliminate_t(const RatPoly& p);

/// Sparse P - Q; empty iff P == Q.
std::map<Monomial, Rational> coeff_diff(const RatPoly& p, const RatPoly& q);

std::string monomial_name(const Monomial& m);

}  // namespace symchab
