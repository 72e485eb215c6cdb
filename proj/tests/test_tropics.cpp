#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "symchab/errors.hpp"
#include "symchab/tropics.hpp"

using namespace symchab;

namespace {

PureSeries uni(std::map<std::int64_t, Rational> terms) { return PureSeries::univariate(std::move(terms)); }

PureSeries pair_series(std::map<std::int64_t, Rational> f1, std::map<std::int64_t, Rational> f2,
                       ExtRational c = ExtRational::infinity()) {
  return PureSeries(2, {{0, ComponentKind::disk, std::move(f1)}, {1, ComponentKind::disk, std::move(f2)}}, c);
}

RatVector at(Rational w) { return {std::move(w)}; }

}  // namespace

TEST_CASE("m_w examples") {
  CHECK(m_w(uni({{1, 0}, {3, 0}}), at(Rational(1, 2))) == ExtRational(Rational(1, 2)));
  CHECK(m_w(uni({{1, 1}, {2, 0}}), at(1)) == ExtRational(2));
  CHECK(m_w(uni({}), at(1)).is_infinite());
  CHECK_THROWS_AS(m_w(uni({{1, 0}}), RatVector{1, 2}), DomainError);
}

TEST_CASE("vrt_w examples") {
  const auto f = uni({{1, 1}, {2, 0}});
  CHECK(vrt_w(f, at(1)) == VertexSet{{{1}, 1}, {{2}, 0}});
  CHECK(vrt_w(f, at(2)) == VertexSet{{{1}, 1}});
  CHECK(vrt_w(uni({{1, 0}}), at(-7)) == VertexSet{{{1}, 0}});
  CHECK(vrt_w(uni({}), at(0)).empty());
}

TEST_CASE("vrt_box examples") {
  const auto f = uni({{1, 1}, {2, 0}});
  CHECK(vrt_box(f, BoxPolyhedron({{2, 3}})) == VertexSet{{{1}, 1}});
  CHECK(vrt_box(f, BoxPolyhedron({{Rational(1, 2), 2}})) == VertexSet{{{1}, 1}, {{2}, 0}});
  CHECK(vrt_box(uni({{1, 0}, {4, 10}}), BoxPolyhedron({{0, 1}})) == VertexSet{{{1}, 0}});
}

TEST_CASE("trop_pure examples") {
  const auto one = trop_pure(uni({{1, 1}, {2, 0}}), BoxPolyhedron({{0, 3}}));
  CHECK(one.points == std::vector<RatVector>{at(1)});
  CHECK(one.segments.empty());

  const auto diag = trop_pure(pair_series({{1, 0}}, {{1, 0}}), BoxPolyhedron({{0, 1}, {0, 1}}));
  CHECK(diag.points.empty());
  REQUIRE(diag.segments.size() == 1);
  CHECK(diag.contains({Rational(0), Rational(0)}));
  CHECK(diag.contains({Rational(1), Rational(1)}));
  CHECK(diag.contains({Rational(1, 3), Rational(1, 3)}));
  CHECK_FALSE(diag.contains({Rational(1, 3), Rational(1, 2)}));

  CHECK(trop_pure(uni({{3, 1}}), BoxPolyhedron({{-5, 5}})).empty());

  const auto three = PureSeries(3, {{0, ComponentKind::disk, {{1, 0}}}, {1, ComponentKind::disk, {}},
                                    {2, ComponentKind::disk, {}}});
  CHECK_THROWS_AS(trop_pure(three, BoxPolyhedron({{0, 1}, {0, 1}, {0, 1}})), UnsupportedError);
}

TEST_CASE("gamma_w examples") {
  CHECK(gamma_of(VertexSet{{{1}, 1}}).vertices() == std::vector<Point2>{{1, 0}});
  CHECK(gamma_of(VertexSet{{{1, 0}, 0}, {{0, 2}, 0}}) == hull({{1, 0}, {0, 2}}));
  CHECK(gamma_of(VertexSet{{{0, 0}, 0}, {{2, 0}, 0}, {{0, 1}, 0}}).vertices().size() == 3);
  const auto f = pair_series({{1, 0}, {2, 0}}, {{1, 0}, {3, 0}}, 0);
  const auto g = gamma_w(f, RatVector{0, 0});
  CHECK(g == hull({{0, 0}, {2, 0}, {0, 3}}));
}

TEST_CASE("disk_truncation_window examples") {
  CHECK(disk_truncation_window(2, PAdicContext(5, 1)) == 2);
  CHECK(disk_truncation_window(4, PAdicContext(5, 1)) == 5);
  CHECK(disk_truncation_window(1, PAdicContext(5, 2)) == 1);
  for (std::int64_t k = 1; k <= 200; ++k) {
    for (std::int64_t e : {1, 2}) {
      const PAdicContext ctx(5, e);
      CHECK(Rational(disk_truncation_window(k, ctx)) <= mu(e, 5) * k);
    }
  }
}

TEST_CASE("annulus_window examples") {
  CHECK(annulus_window(4, PAdicContext(5, 1)) == 16);
  CHECK(annulus_window(4, PAdicContext(5, 1)) <= 8 * 4 - 8);
  CHECK(annulus_window(4, PAdicContext(5, 1), 0) == 8);
  CHECK(rank_favorable_width(0, PAdicContext(5, 1)) == 8);
  CHECK(rank_favorable_width(1, PAdicContext(5, 2)) == 16);
  for (std::int64_t g = 2; g <= 40; ++g) CHECK(annulus_window(g, PAdicContext(5, 1)) <= 8 * g - 8);
}

TEST_CASE("aux_support examples") {
  using Support = std::vector<std::vector<std::int64_t>>;
  CHECK(aux_support(uni({{1, 1}, {2, 0}}), BoxPolyhedron({{Rational(1, 2), 2}})) == Support{{1}, {2}});
  CHECK(aux_support(uni({{1, 0}, {4, 10}}), BoxPolyhedron({{0, 1}})) == Support{{1}});
  CHECK(aux_support(PureSeries::univariate({}, 4), BoxPolyhedron({{-3, 3}})) == Support{{0}});
}

TEST_CASE("purity: vrt_w lies in the union of per-component vertex sets and the constant") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> exps(1, 9);
  std::uniform_int_distribution<std::int64_t> vals(-12, 12);
  std::uniform_int_distribution<std::int64_t> ws(-30, 30);
  for (int s = 0; s < 300; ++s) {
    std::map<std::int64_t, Rational> f1;
    std::map<std::int64_t, Rational> f2;
    for (int i = 0; i < 5; ++i) {
      f1[exps(rng)] = Rational(vals(rng), 2);
      f2[exps(rng)] = Rational(vals(rng), 3);
    }
    const ExtRational c = s % 2 == 0 ? ExtRational(Rational(vals(rng))) : ExtRational::infinity();
    const auto f = pair_series(f1, f2, c);
    const RatVector w{Rational(ws(rng), 7), Rational(ws(rng), 5)};
    std::set<HeightEntry> allowed;
    for (int var = 0; var < 2; ++var) {
      const auto piece = PureSeries::univariate(var == 0 ? f1 : f2);
      for (const auto& e : vrt_w(piece, at(w[static_cast<std::size_t>(var)]))) {
        std::vector<std::int64_t> u(2, 0);
        u[static_cast<std::size_t>(var)] = e.u[0];
        allowed.insert({u, e.val});
      }
    }
    if (c.is_finite()) allowed.insert({{0, 0}, c});
    for (const auto& e : vrt_w(f, w)) CHECK(allowed.contains(e));
    CHECK_FALSE(vrt_w(f, w).empty());
  }
}

TEST_CASE("disk truncation: exponents past the window never enter vrt_w for w > 1/e") {
  // Coefficients of an integral of a differential: v(a_u) >= -v(u), with equality at u = k.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> ks(1, 40);
  std::uniform_int_distribution<std::int64_t> extra(0, 3);
  std::uniform_int_distribution<std::int64_t> ws(1, 60);
  for (int s = 0; s < 1000; ++s) {
    const std::int64_t e = s % 2 == 0 ? 1 : 2;
    const PAdicContext ctx(5, e);
    const std::int64_t k = ks(rng);
    std::map<std::int64_t, Rational> terms;
    for (std::int64_t u = k; u <= 3 * k + 30; ++u) {
      const Rational base(-vp(u, 5));
      terms[u] = u == k ? base : base + Rational(extra(rng) == 0 ? 0 : extra(rng), e);
    }
    const auto f = uni(terms);
    const std::int64_t window = disk_truncation_window(k, ctx);
    const Rational w = Rational(1, e) + Rational(ws(rng), 20);
    for (const auto& entry : vrt_w(f, at(w))) CHECK(entry.u[0] <= window);
  }
}
