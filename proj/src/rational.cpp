#include "symchab/rational.hpp"

#include <cctype>
#include <limits>

#include "symchab/errors.hpp"

namespace symchab {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("malformed rational \"" + std::string(whole) + "\"");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("malformed rational \"" + std::string(whole) + "\"");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);
  auto slash = trimmed.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(trimmed, text));
  Integer num = parse_integer(trimmed.substr(0, slash), text);
  Integer den = parse_integer(trimmed.substr(slash + 1), text);
  if (den <= 0) throw ParseError("rational \"" + std::string(text) + "\" needs a positive denominator");
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::string compact_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return format_rational(q);
}

std::string decimal_string(const Rational& q, int digits) {
  Integer num = numerator(q);
  const Integer den = denominator(q);
  const bool negative = num < 0;
  if (negative) num = -num;
  Integer whole = num / den;
  Integer rem = num % den;
  std::string out = (negative ? "-" : "") + whole.str();
  if (digits > 0) {
    out += '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      out += static_cast<char>('0' + static_cast<int>(rem / den));
      rem %= den;
    }
  }
  return out;
}

Integer floor_of(const Rational& q) {
  Integer num = numerator(q);
  const Integer den = denominator(q);
  Integer f = num / den;  // truncates toward zero
  if (num < 0 && f * den != num) f -= 1;
  return f;
}

Integer ceil_of(const Rational& q) { return -floor_of(-q); }

std::int64_t to_int64(const Integer& n) {
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
    throw DomainError("integer " + n.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(n);
}

const Rational& ExtRational::value() const {
  if (!finite_) throw DomainError("value() of +infinity");
  return value_;
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtRational::infinity();
  return ExtRational(a.value_ + b.value_);
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtRational::to_string() const { return finite_ ? format_rational(value_) : "inf"; }

ExtRational ExtRational::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return infinity();
  return ExtRational(parse_rational(text));
}

}  // namespace symchab
