#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "symchab/rational.hpp"

namespace symchab {

struct Point2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Point2&, const Point2&) = default;
  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
};

/// Convex lattice polygon in canonical form: counterclockwise hull vertices starting
/// at the lexicographically smallest one, no repeated or collinear vertices.
/// Segments keep their two endpoints in sorted order; points a single vertex.
class LatticePolytope2 {
 public:
  LatticePolytope2() = default;  // empty

  const std::vector<Point2>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }
  bool is_point() const { return vertices_.size() == 1; }
  bool is_segment() const { return vertices_.size() == 2; }
  bool contains(Point2 q) const;

  friend bool operator==(const LatticePolytope2&, const LatticePolytope2&) = default;
  friend LatticePolytope2 hull(std::span<const Point2> points);

 private:
  std::vector<Point2> vertices_;
};

using IntMatrix2 = std::array<std::array<std::int64_t, 2>, 2>;

LatticePolytope2 hull(std::span<const Point2> points);
LatticePolytope2 hull(std::initializer_list<Point2> points);
LatticePolytope2 newton_polygon(std::span<const Point2> support);

LatticePolytope2 minkowski_sum(const LatticePolytope2& a, const LatticePolytope2& b);

/// Twice the area, an integer for lattice polygons.
Integer twice_area(const LatticePolytope2& p);
Rational area2(const LatticePolytope2& p);

/// area(A + B) - area(A) - area(B), the lambda_1 lambda_2 coefficient of vol(l1 A + l2 B).
Rational mixed_volume2(const LatticePolytope2& a, const LatticePolytope2& b);

std::int64_t permanent2(const IntMatrix2& m);

/// conv(e1, e2, a1 e1, a2 e2): the disk-case truncation quadrilateral.
LatticePolytope2 disk_quadrilateral(std::int64_t a1, std::int64_t a2);

/// conv(lo1 e1, hi1 e1, lo2 e2, hi2 e2): an annulus exponent window on each axis.
LatticePolytope2 axis_quadrilateral(std::int64_t lo1, std::int64_t hi1, std::int64_t lo2, std::int64_t hi2);

/// Exact mixed area of the two disk quadrilaterals built from the rows of `a`.
/// Throws DomainError if any entry is below 1.
Rational mv_case_quadrilaterals(const IntMatrix2& a);

/// (Per(a) - 2) / 2, the published closed form for mv_case_quadrilaterals.
Rational quadrilateral_closed_form(const IntMatrix2& a);

/// Mixed area of the Newton polygons of two supports.
Rational bernstein_bound(std::span<const Point2> support1, std::span<const Point2> support2);

}  // namespace symchab
