#pragma once

#include <cstdint>
#include <span>

#include "symchab/rational.hpp"

namespace symchab {

bool is_prime(std::int64_t n);

/// Residue characteristic and ramification index of the local field in play.
/// Requires p prime, p >= 5, e >= 1 and p > e + 1.
class PAdicContext {
 public:
  PAdicContext(std::int64_t p, std::int64_t e);

  std::int64_t p() const { return p_; }
  std::int64_t e() const { return e_; }

 private:
  std::int64_t p_;
  std::int64_t e_;
};

/// p-adic valuation of a nonzero integer (v(p) = 1).
std::int64_t vp(std::int64_t n, std::int64_t p);

/// floor(log_p n) for n >= 1, computed with integers.
std::int64_t floor_log(std::int64_t n, std::int64_t p);

/// Largest N >= 0 with r v(k+1) + N <= r v(k+N+1).
///
/// The search runs downward from the cap r * floor(k / (p - r - 1)), beyond which no
/// N can satisfy the condition when p > r + 1. Throws UnsupportedError when
/// p <= r + 1 and DomainError for r <= 0 or k < 0.
std::int64_t delta(const Rational& r, std::int64_t k, const PAdicContext& ctx);

/// (p - 1) / (p - r - 1); k + delta(r, k) <= mu(r, p) k for all k >= 0.
Rational mu(const Rational& r, std::int64_t p);

/// Smallest positive N such that r (n - n0) > floor(log_p n) for every n >= N.
std::int64_t n_p(const Rational& r, std::int64_t n0, std::int64_t p);

/// Product of factorials of the multiplicities.
Integer multiplicity_factor(std::span<const std::int64_t> multiplicities);

}  // namespace symchab
