#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symchab/errors.hpp"
#include "symchab/oracle.hpp"

using namespace symchab;

namespace {

FiniteFieldSystem sys(std::int64_t q, std::vector<FfTerm> f1, std::vector<FfTerm> f2) {
  return {q, std::move(f1), std::move(f2)};
}

}  // namespace

TEST_CASE("torus_solutions examples") {
  CHECK(torus_solutions(sys(101, {{1, 0, 1}, {0, 1, 1}, {0, 0, -2}}, {{1, 0, 1}, {0, 1, -1}})) == 1);
  CHECK(torus_solutions(sys(7, {{1, 0, 1}, {0, 0, -1}}, {{0, 1, 1}, {0, 0, -1}})) == 1);
  CHECK(torus_solutions(sys(7, {{1, 0, 1}, {0, 0, -1}}, {{1, 0, 1}, {0, 0, -2}})) == 0);
}

TEST_CASE("torus_solutions matches a reference scan") {
  // x^2 + y^2 = 5, xy = 2: (1,2), (2,1), (-1,-2), (-2,-1).
  const auto circle = sys(101, {{2, 0, 1}, {0, 2, 1}, {0, 0, -5}}, {{1, 1, 1}, {0, 0, -2}});
  CHECK(torus_solutions(circle) == 4);
  CHECK(torus_solutions(FiniteFieldSystem{7, circle.f1, circle.f2}) == 4);
  // y = x^3, x = y^2: x^5 = 1 has five roots in F_101.
  const auto curves = sys(101, {{3, 0, 1}, {0, 1, -1}}, {{0, 2, 1}, {1, 0, -1}});
  CHECK(torus_solutions(curves) == 5);
  CHECK(bernstein_bound(support_of(curves.f1, 101), support_of(curves.f2, 101)) == 5);
}

TEST_CASE("negative exponents are cleared without changing torus zeros") {
  const auto poly = sys(101, {{1, 0, 1}, {0, 0, -3}}, {{0, 1, 1}, {0, 0, -4}});
  const auto laurent = sys(101, {{0, -2, 1}, {-1, -2, -3}}, {{-3, 1, 1}, {-3, 0, -4}});
  CHECK(torus_solutions(poly) == torus_solutions(laurent));
  CHECK(has_finitely_many_zeros(laurent));
}

TEST_CASE("has_finitely_many_zeros examples") {
  CHECK(has_finitely_many_zeros(sys(101, {{1, 0, 1}, {0, 1, -1}}, {{1, 0, 1}, {0, 1, 1}, {0, 0, -2}})));
  CHECK_FALSE(has_finitely_many_zeros(sys(101, {{1, 0, 1}, {0, 1, -1}}, {{1, 0, 1}, {0, 1, -1}})));
  CHECK(has_finitely_many_zeros(sys(7, {{1, 0, 1}, {0, 0, -1}}, {{0, 1, 1}, {0, 0, -1}})));
  // A shared factor free of y is invisible to Res_y alone.
  CHECK_FALSE(has_finitely_many_zeros(sys(7, {{1, 0, 1}, {0, 0, -1}}, {{1, 0, 2}, {0, 0, -2}})));
  // (x - 1)(y - 2) and (x - 1)(x + y): common curve x = 1.
  CHECK_FALSE(has_finitely_many_zeros(
      sys(101, {{1, 1, 1}, {1, 0, -2}, {0, 1, -1}, {0, 0, 2}}, {{2, 0, 1}, {1, 1, 1}, {1, 0, -1}, {0, 1, -1}})));
  CHECK_THROWS_AS(has_finitely_many_zeros(sys(7, {{1, 0, 7}}, {})), DomainError);
  CHECK(has_finitely_many_zeros(sys(7, {}, {{2, 1, 3}})));
  CHECK_FALSE(has_finitely_many_zeros(sys(7, {}, {{1, 0, 1}, {0, 0, 1}})));
}

TEST_CASE("system validation") {
  CHECK_THROWS_AS(torus_solutions(sys(100, {}, {})), DomainError);
  CHECK_THROWS_AS(torus_solutions(sys(2003, {}, {})), DomainError);
  CHECK_THROWS_AS(torus_solutions(sys(7, {{31, 0, 1}}, {})), DomainError);
}

TEST_CASE("Bernstein bound holds on random finite systems") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> e(0, 3);
  std::uniform_int_distribution<std::int64_t> c(1, 30);
  std::uniform_int_distribution<int> n(2, 4);
  int finite = 0;
  for (int i = 0; i < 200 && finite < 40; ++i) {
    FiniteFieldSystem s{31, {}, {}};
    for (int k = n(rng); k > 0; --k) s.f1.push_back({e(rng), e(rng), c(rng)});
    for (int k = n(rng); k > 0; --k) s.f2.push_back({e(rng), e(rng), c(rng)});
    if (support_of(s.f1, 31).empty() || support_of(s.f2, 31).empty() || !has_finitely_many_zeros(s)) continue;
    ++finite;
    CHECK(Rational(torus_solutions(s)) <= bernstein_bound(support_of(s.f1, 31), support_of(s.f2, 31)));
  }
  CHECK(finite >= 40);
}

TEST_CASE("grid_vrt examples") {
  const auto single = PureSeries::univariate({{2, 3}});
  for (const auto& [w, entries] : grid_vrt(single, BoxPolyhedron({{-1, 4}}), 3)) {
    CHECK(entries == VertexSet{{{2}, 3}});
  }
  const auto f = PureSeries::univariate({{1, 1}, {2, 0}});
  const auto grid = grid_vrt(f, BoxPolyhedron({{0, 3}}), 1);
  REQUIRE(grid.contains(RatVector{1}));
  CHECK(grid.at(RatVector{1}).size() == 2);
  for (const auto& [w, entries] : grid) {
    if (w[0] != 1) CHECK(entries.size() == 1);
  }
  const auto pair = PureSeries(2, {{0, ComponentKind::disk, {{1, 0}}}, {1, ComponentKind::disk, {{1, 0}}}});
  const BoxPolyhedron box({{0, 1}, {0, 1}});
  const TropLocus locus = trop_pure(pair, box);
  for (const auto& [w, entries] : grid_vrt(pair, box, 4)) {
    CHECK(entries == vrt_w(pair, w));
    if (entries.size() > 1) CHECK(locus.contains(w));
  }
}

TEST_CASE("brute_delta examples") {
  CHECK(brute_delta(1, 3, PAdicContext(5, 1), 50) == 1);
  CHECK_THROWS_AS(brute_delta(1, 3, PAdicContext(5, 1), 1), InconclusiveError);
  for (std::int64_t k = 0; k <= 60; ++k) {
    CHECK(brute_delta(2, k, PAdicContext(7, 1), 80) == delta(2, k, PAdicContext(7, 1)));
  }
}

TEST_CASE("brute_np examples") {
  CHECK(brute_np(Rational(1, 2), 2, 5, 200) == 3);
  CHECK(brute_np(1, 6, 5, 200) == 8);
  CHECK_THROWS_AS(brute_np(1, 60, 5, 100), InconclusiveError);
  for (std::int64_t n0 = 0; n0 <= 50; ++n0) CHECK(brute_np(Rational(1, 2), n0, 7, 400) == n_p(Rational(1, 2), n0, 7));
}
