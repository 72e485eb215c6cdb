#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace symchab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "num/den" or "num" (den > 0). Non-reduced input is normalized.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form, den > 0, always with a denominator.
std::string format_rational(const Rational& q);

/// "num" for integers, "num/den" otherwise.
std::string compact_rational(const Rational& q);

/// Fixed-point rendering with `digits` fractional digits, truncated toward zero.
std::string decimal_string(const Rational& q, int digits);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// Narrowing with a range check; throws DomainError if the value does not fit.
std::int64_t to_int64(const Integer& n);

/// A rational number extended by +infinity, the value of an absent coefficient.
class ExtRational {
 public:
  ExtRational() = default;  // +infinity
  ExtRational(Rational v) : finite_(true), value_(std::move(v)) {}
  ExtRational(std::int64_t v) : finite_(true), value_(v) {}

  static ExtRational infinity() { return ExtRational(); }

  bool is_infinite() const { return !finite_; }
  bool is_finite() const { return finite_; }
  /// Throws DomainError for +infinity.
  const Rational& value() const;

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

  /// "inf" or format_rational(value).
  std::string to_string() const;
  static ExtRational parse(std::string_view text);

 private:
  bool finite_ = false;
  Rational value_{0};
};

}  // namespace symchab
