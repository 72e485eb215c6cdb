#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <vector>

#include "symchab/errors.hpp"
#include "symchab/padic.hpp"

using namespace symchab;

TEST_CASE("vp") {
  CHECK(vp(1, 5) == 0);
  CHECK(vp(25, 5) == 2);
  CHECK(vp(6, 5) == 0);
  CHECK(vp(-250, 5) == 3);
  CHECK_THROWS_AS(vp(0, 5), DomainError);
}

TEST_CASE("floor_log") {
  CHECK(floor_log(1, 5) == 0);
  CHECK(floor_log(4, 5) == 0);
  CHECK(floor_log(5, 5) == 1);
  CHECK(floor_log(124, 5) == 2);
  CHECK(floor_log(125, 5) == 3);
}

TEST_CASE("context validation") {
  CHECK_NOTHROW(PAdicContext(5, 1));
  CHECK_NOTHROW(PAdicContext(5, 2));
  CHECK_THROWS_AS(PAdicContext(5, 4), UnsupportedError);
  CHECK_THROWS_AS(PAdicContext(9, 1), DomainError);
  CHECK_THROWS_AS(PAdicContext(3, 1), DomainError);
}

TEST_CASE("delta examples") {
  const PAdicContext ctx(5, 1);
  CHECK(delta(1, 0, ctx) == 0);
  CHECK(delta(1, 3, ctx) == 1);
  CHECK(delta(2, 3, ctx) == 1);
  CHECK_THROWS_AS(delta(4, 3, ctx), UnsupportedError);
  CHECK_THROWS_AS(delta(0, 3, ctx), DomainError);
  CHECK_THROWS_AS(delta(1, -1, ctx), DomainError);
}

TEST_CASE("delta matches a reference scan") {
  // Reference values from an independent scan over N < 400.
  const std::vector<std::int64_t> r1_p5 = {0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0,
                                           0, 0, 1, 0, 0, 0, 2, 1, 0, 0, 0, 0, 1, 0, 0};
  const std::vector<std::int64_t> r2_p7 = {0, 0, 0, 0, 2, 1, 0, 0, 0, 0, 0, 2, 1, 0, 0, 0,
                                           0, 0, 2, 1, 0, 0, 0, 0, 0, 2, 1, 0, 0, 0, 0};
  for (std::size_t k = 0; k < r1_p5.size(); ++k) {
    CHECK(delta(1, static_cast<std::int64_t>(k), PAdicContext(5, 1)) == r1_p5[k]);
    CHECK(delta(2, static_cast<std::int64_t>(k), PAdicContext(7, 1)) == r2_p7[k]);
  }
}

TEST_CASE("mu examples") {
  CHECK(mu(1, 5) == Rational(4, 3));
  CHECK(mu(2, 5) == 2);
  CHECK(mu(1, 7) == Rational(6, 5));
  CHECK_THROWS_AS(mu(4, 5), UnsupportedError);
}

TEST_CASE("n_p examples") {
  CHECK(n_p(Rational(1, 2), 2, 5) == 3);
  CHECK(n_p(1, 6, 5) == 8);
  CHECK(n_p(Rational(1, 2), 6, 5) == 9);
  CHECK_THROWS_AS(n_p(0, 6, 5), DomainError);
}

TEST_CASE("n_p matches a reference scan") {
  const std::vector<std::int64_t> half_p5 = {2, 3, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23};
  for (std::size_t i = 0; i < half_p5.size(); ++i) {
    CHECK(n_p(Rational(1, 2), static_cast<std::int64_t>(i) + 1, 5) == half_p5[i]);
  }
  const std::vector<std::int64_t> one_p7 = {1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22};
  for (std::size_t i = 0; i < one_p7.size(); ++i) CHECK(n_p(1, static_cast<std::int64_t>(i), 7) == one_p7[i]);
}

TEST_CASE("multiplicity_factor") {
  const std::array<std::int64_t, 2> distinct{1, 1};
  const std::array<std::int64_t, 1> doubled{2};
  const std::array<std::int64_t, 2> mixed{3, 2};
  CHECK(multiplicity_factor(distinct) == 1);
  CHECK(multiplicity_factor(doubled) == 2);
  CHECK(multiplicity_factor(mixed) == 12);
}

TEST_CASE("delta stays under its cap and mu") {
  for (std::int64_t p : {5, 7, 11, 13}) {
    for (std::int64_t r : {1, 2}) {
      for (std::int64_t k = 0; k <= 300; ++k) {
        const std::int64_t d = delta(r, k, PAdicContext(p, 1));
        CHECK(d <= r * (k / (p - r - 1)));
        CHECK(Rational(k + d) <= mu(r, p) * k);
      }
    }
  }
}

TEST_CASE("n_p is nondecreasing in n0 and N_p(1/2, n0) <= 2 n0") {
  for (std::int64_t p : {5, 7, 11}) {
    std::int64_t prev = 0;
    for (std::int64_t n0 = 1; n0 <= 300; ++n0) {
      const std::int64_t cur = n_p(Rational(1, 2), n0, p);
      CHECK(cur >= prev);
      CHECK(cur <= 2 * n0);
      prev = cur;
    }
  }
}
