#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "symchab/errors.hpp"
#include "symchab/polytope.hpp"

using namespace symchab;

namespace {

const LatticePolytope2 kSquare = hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
const LatticePolytope2 kTriangle = hull({{0, 0}, {1, 0}, {0, 1}});

LatticePolytope2 random_polygon(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coord(-6, 6);
  std::uniform_int_distribution<int> count(1, 6);
  std::vector<Point2> pts(static_cast<std::size_t>(count(rng)));
  for (auto& p : pts) p = {coord(rng), coord(rng)};
  return hull(pts);
}

LatticePolytope2 translate(const LatticePolytope2& p, Point2 by) {
  std::vector<Point2> pts;
  for (const auto& v : p.vertices()) pts.push_back(v + by);
  return hull(pts);
}

}  // namespace

TEST_CASE("hull examples") {
  CHECK(kSquare.vertices() == std::vector<Point2>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const auto seg = hull({{0, 0}, {2, 0}, {1, 0}});
  CHECK(seg.is_segment());
  CHECK(seg.vertices() == std::vector<Point2>{{0, 0}, {2, 0}});
  CHECK(hull({{5, 5}}).is_point());
  CHECK(hull(std::vector<Point2>{}).empty());
}

TEST_CASE("minkowski_sum examples") {
  const auto sum = minkowski_sum(kTriangle, hull({{1, 0}, {0, 1}}));
  CHECK(sum == hull({{1, 0}, {2, 0}, {0, 2}, {0, 1}}));
  CHECK(area2(sum) == Rational(3, 2));
  CHECK(minkowski_sum(kSquare, hull({{3, -1}})) == translate(kSquare, {3, -1}));
  CHECK(minkowski_sum(kSquare, kSquare) == hull({{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
}

TEST_CASE("area2 examples") {
  CHECK(area2(kSquare) == 1);
  CHECK(area2(hull({{1, 0}, {2, 0}, {0, 2}, {0, 1}})) == Rational(3, 2));
  CHECK(area2(hull({{0, 0}, {4, 4}})) == 0);
}

TEST_CASE("mixed_volume2 examples") {
  CHECK(mixed_volume2(kSquare, kSquare) == 2);
  CHECK(mixed_volume2(kTriangle, kTriangle) == 1);
  CHECK(mixed_volume2(hull({{0, 0}, {3, 0}}), hull({{0, 0}, {0, 2}})) == 6);
}

TEST_CASE("mixed volumes of fixed polygons match a reference computation") {
  const auto a = hull({{0, 0}, {3, 1}, {1, 4}, {-2, 2}});
  const auto b = hull({{0, 0}, {5, 0}, {2, 3}});
  const auto c = hull({{1, 1}, {-1, 2}});
  CHECK(mixed_volume2(a, b) == 25);
  CHECK(mixed_volume2(a, c) == 9);
  CHECK(mixed_volume2(b, c) == 8);
}

TEST_CASE("newton_polygon examples") {
  const std::vector<Point2> tri{{0, 0}, {2, 1}, {1, 3}};
  CHECK(newton_polygon(tri).vertices().size() == 3);
  const std::vector<Point2> laurent{{-1, 0}, {1, 0}};
  CHECK(newton_polygon(laurent).is_segment());
  const std::vector<Point2> origin{{0, 0}};
  CHECK(newton_polygon(origin).is_point());
}

TEST_CASE("permanent2 examples") {
  CHECK(permanent2({{{1, 0}, {0, 1}}}) == 1);
  CHECK(permanent2({{{2, 2}, {2, 2}}}) == 8);
  CHECK(permanent2({{{3, 1}, {4, 2}}}) == 10);
}

TEST_CASE("mv_case_quadrilaterals examples") {
  CHECK(mv_case_quadrilaterals({{{1, 1}, {1, 1}}}) == 0);
  CHECK(mv_case_quadrilaterals({{{2, 2}, {2, 2}}}) == 3);
  CHECK(mv_case_quadrilaterals({{{3, 3}, {3, 3}}}) == 8);
  CHECK_THROWS_AS(mv_case_quadrilaterals({{{0, 1}, {1, 1}}}), DomainError);
}

TEST_CASE("mv_case_quadrilaterals equals max(a11 a22, a12 a21) - 1") {
  IntMatrix2 a{};
  for (a[0][0] = 1; a[0][0] <= 8; ++a[0][0]) {
    for (a[0][1] = 1; a[0][1] <= 8; ++a[0][1]) {
      for (a[1][0] = 1; a[1][0] <= 8; ++a[1][0]) {
        for (a[1][1] = 1; a[1][1] <= 8; ++a[1][1]) {
          const std::int64_t want = std::max(a[0][0] * a[1][1], a[0][1] * a[1][0]) - 1;
          CHECK(mv_case_quadrilaterals(a) == want);
          if (a[0][0] * a[1][1] == a[0][1] * a[1][0]) CHECK(mv_case_quadrilaterals(a) == quadrilateral_closed_form(a));
        }
      }
    }
  }
}

TEST_CASE("bernstein_bound examples") {
  const std::vector<Point2> s1{{0, 0}, {1, 0}, {0, 1}};
  const std::vector<Point2> s2{{1, 0}, {0, 1}};
  CHECK(bernstein_bound(s1, s2) == 1);
  const std::vector<Point2> sq{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  CHECK(bernstein_bound(sq, sq) == 2);
  const std::vector<Point2> pt{{2, 3}};
  CHECK(bernstein_bound(pt, sq) == 0);
}

TEST_CASE("mixed_volume2 properties on random polygons") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_polygon(rng);
    const auto a2 = random_polygon(rng);
    const auto b = random_polygon(rng);
    CHECK(mixed_volume2(a, b) == mixed_volume2(b, a));
    CHECK(mixed_volume2(translate(a, {3, -2}), b) == mixed_volume2(a, b));
    CHECK(mixed_volume2(minkowski_sum(a, a2), b) == mixed_volume2(a, b) + mixed_volume2(a2, b));
    CHECK(mixed_volume2(a, a) == 2 * area2(a));
    CHECK(mixed_volume2(a, b) >= 0);
    // a is contained in conv(a, a2).
    std::vector<Point2> both = a.vertices();
    both.insert(both.end(), a2.vertices().begin(), a2.vertices().end());
    CHECK(mixed_volume2(a, b) <= mixed_volume2(hull(both), b));
  }
}

TEST_CASE("contains") {
  CHECK(kSquare.contains({1, 1}));
  CHECK_FALSE(kSquare.contains({2, 1}));
  CHECK(hull({{0, 0}, {4, 2}}).contains({2, 1}));
  CHECK_FALSE(hull({{0, 0}, {4, 2}}).contains({1, 1}));
}
