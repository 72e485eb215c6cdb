#include "symchab/polytope.hpp"

#include <algorithm>

#include "symchab/errors.hpp"

namespace symchab {

namespace {

__int128 cross(Point2 o, Point2 a, Point2 b) {
  return static_cast<__int128>(a.x - o.x) * (b.y - o.y) - static_cast<__int128>(a.y - o.y) * (b.x - o.x);
}

}  // namespace

LatticePolytope2 hull(std::span<const Point2> points) {
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolytope2 out;
  if (pts.size() <= 1) {
    out.vertices_ = std::move(pts);
    return out;
  }
  // Andrew's monotone chain; strict turns drop collinear points.
  std::vector<Point2> chain(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(chain[k - 2], chain[k - 1], p) <= 0) --k;
    chain[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(chain[k - 2], chain[k - 1], pts[i]) <= 0) --k;
    chain[k++] = pts[i];
  }
  chain.resize(k - 1);
  if (chain.size() == 2 && chain[1] < chain[0]) std::swap(chain[0], chain[1]);
  out.vertices_ = std::move(chain);
  return out;
}

LatticePolytope2 hull(std::initializer_list<Point2> points) {
  return hull(std::span<const Point2>(points.begin(), points.size()));
}

LatticePolytope2 newton_polygon(std::span<const Point2> support) {
  if (support.empty()) throw DomainError("Newton polygon of an empty support");
  return hull(support);
}

bool LatticePolytope2::contains(Point2 q) const {
  const auto& v = vertices_;
  if (v.empty()) return false;
  if (v.size() == 1) return v[0] == q;
  if (v.size() == 2) {
    return cross(v[0], v[1], q) == 0 && std::min(v[0], v[1]) <= q && q <= std::max(v[0], v[1]) &&
           std::min(v[0].y, v[1].y) <= q.y && q.y <= std::max(v[0].y, v[1].y);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (cross(v[i], v[(i + 1) % v.size()], q) < 0) return false;
  }
  return true;
}

LatticePolytope2 minkowski_sum(const LatticePolytope2& a, const LatticePolytope2& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Point2> sums;
  sums.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& p : a.vertices()) {
    for (const auto& q : b.vertices()) sums.push_back(p + q);
  }
  return hull(sums);
}

Integer twice_area(const LatticePolytope2& p) {
  const auto& v = p.vertices();
  if (v.size() < 3) return 0;
  __int128 s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    s += static_cast<__int128>(a.x) * b.y - static_cast<__int128>(b.x) * a.y;
  }
  if (s < 0) s = -s;
  Integer out = static_cast<std::int64_t>(s >> 62);
  out <<= 62;
  out += static_cast<std::int64_t>(s & ((static_cast<__int128>(1) << 62) - 1));
  return out;
}

Rational area2(const LatticePolytope2& p) { return Rational(twice_area(p), 2); }

Rational mixed_volume2(const LatticePolytope2& a, const LatticePolytope2& b) {
  const Integer twice = twice_area(minkowski_sum(a, b)) - twice_area(a) - twice_area(b);
  return Rational(twice, 2);
}

std::int64_t permanent2(const IntMatrix2& m) { return m[0][0] * m[1][1] + m[0][1] * m[1][0]; }

LatticePolytope2 disk_quadrilateral(std::int64_t a1, std::int64_t a2) {
  return hull({{1, 0}, {0, 1}, {a1, 0}, {0, a2}});
}

LatticePolytope2 axis_quadrilateral(std::int64_t lo1, std::int64_t hi1, std::int64_t lo2, std::int64_t hi2) {
  return hull({{lo1, 0}, {hi1, 0}, {0, lo2}, {0, hi2}});
}

Rational mv_case_quadrilaterals(const IntMatrix2& a) {
  for (const auto& row : a) {
    for (auto x : row) {
      if (x < 1) throw DomainError("truncation degrees a_ij must be at least 1");
    }
  }
  return mixed_volume2(disk_quadrilateral(a[0][0], a[0][1]), disk_quadrilateral(a[1][0], a[1][1]));
}

Rational quadrilateral_closed_form(const IntMatrix2& a) { return Rational(permanent2(a) - 2, 2); }

Rational bernstein_bound(std::span<const Point2> support1, std::span<const Point2> support2) {
  return mixed_volume2(newton_polygon(support1), newton_polygon(support2));
}

}  // namespace symchab
