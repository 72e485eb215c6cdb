#include "symchab/padic.hpp"

#include <algorithm>

#include "symchab/errors.hpp"

namespace symchab {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PAdicContext::PAdicContext(std::int64_t p, std::int64_t e) : p_(p), e_(e) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (p < 5) throw DomainError("p must be at least 5");
  if (e < 1) throw DomainError("ramification index must be positive");
  if (p <= e + 1) throw UnsupportedError("need p > e + 1");
}

std::int64_t vp(std::int64_t n, std::int64_t p) {
  if (n == 0) throw DomainError("valuation of 0 is +infinity");
  if (p < 2) throw DomainError("p must be at least 2");
  std::int64_t m = 0;
  if (n < 0) n = -n;
  while (n % p == 0) {
    n /= p;
    ++m;
  }
  return m;
}

std::int64_t floor_log(std::int64_t n, std::int64_t p) {
  if (n < 1) throw DomainError("floor_log needs n >= 1");
  std::int64_t m = 0;
  while (n >= p) {
    n /= p;
    ++m;
  }
  return m;
}

std::int64_t delta(const Rational& r, std::int64_t k, const PAdicContext& ctx) {
  if (r <= 0) throw DomainError("delta needs r > 0");
  if (k < 0) throw DomainError("delta needs k >= 0");
  const std::int64_t p = ctx.p();
  const Rational gap = Rational(p) - r - 1;
  if (gap <= 0) throw UnsupportedError("delta needs p > r + 1");

  const Integer blocks = floor_of(Rational(k) / gap);
  const std::int64_t cap = to_int64(floor_of(r * Rational(blocks)));
  const Rational base = r * vp(k + 1, p);
  for (std::int64_t n = cap; n > 0; --n) {
    if (base + n <= r * vp(k + n + 1, p)) return n;
  }
  return 0;
}

Rational mu(const Rational& r, std::int64_t p) {
  if (r <= 0) throw DomainError("mu needs r > 0");
  const Rational gap = Rational(p) - r - 1;
  if (gap <= 0) throw UnsupportedError("mu needs p > r + 1");
  return Rational(p - 1) / gap;
}

std::int64_t n_p(const Rational& r, std::int64_t n0, std::int64_t p) {
  if (r <= 0) throw DomainError("N_p needs r > 0");
  if (p < 2) throw DomainError("N_p needs p >= 2");

  auto holds = [&](std::int64_t n) { return r * (n - n0) > floor_log(n, p); };

  // Past `tail`, h(n) = r(n - n0) - log_p n exceeds 1 and is increasing
  // (n >= 2/r > 1/(r ln p)), so the condition holds for every larger n.
  std::int64_t tail = std::max<std::int64_t>({1, n0, to_int64(ceil_of(Rational(2) / r))});
  while (true) {
    const Rational needed = Rational(floor_log(tail, p) + 2) / r;
    const std::int64_t next = std::max(tail, n0 + to_int64(ceil_of(needed)));
    if (next == tail) break;
    tail = next;
  }
  for (std::int64_t n = tail - 1; n >= 1; --n) {
    if (!holds(n)) return n + 1;
  }
  return 1;
}

Integer multiplicity_factor(std::span<const std::int64_t> multiplicities) {
  if (multiplicities.empty()) throw DomainError("multiplicity list is empty");
  Integer product = 1;
  for (std::int64_t s : multiplicities) {
    if (s < 1) throw DomainError("multiplicities must be positive");
    for (std::int64_t i = 2; i <= s; ++i) product *= i;
  }
  return product;
}

}  // namespace symchab
