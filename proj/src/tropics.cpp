#include "symchab/tropics.hpp"

#include <algorithm>
#include <string>

#include "symchab/errors.hpp"

namespace symchab {

namespace {

// val + slope * w restricted to one coordinate.
struct Line {
  std::int64_t slope = 0;
  Rational icpt;

  Rational at(const Rational& w) const { return icpt + slope * w; }
};

std::vector<Line> lines_of(const SeriesComponent& c) {
  std::vector<Line> out;
  for (const auto& [exp, val] : c.terms) out.push_back({exp, val});
  return out;
}

struct Range {
  Rational lo;
  Rational hi;
};

// Intersect [lo, hi] with { w : a w <= b }.
bool clip(Range& range, const Rational& a, const Rational& b) {
  if (a == 0) return b >= 0;
  const Rational bound = b / a;
  if (a > 0) {
    if (bound < range.hi) range.hi = bound;
  } else if (bound > range.lo) {
    range.lo = bound;
  }
  return range.lo <= range.hi;
}

// Where `line` is <= every line in `others` and <= `ceiling`, within `range`.
std::optional<Range> active_range(const Line& line, const std::vector<Line>& others, const ExtRational& ceiling,
                                  Range range) {
  for (const auto& o : others) {
    if (o.slope == line.slope && o.icpt == line.icpt) continue;
    if (!clip(range, Rational(line.slope - o.slope), o.icpt - line.icpt)) return std::nullopt;
  }
  if (ceiling.is_finite() && !clip(range, Rational(line.slope), ceiling.value() - line.icpt)) return std::nullopt;
  return range;
}

ExtRational envelope_at(const std::vector<Line>& lines, const Rational& w) {
  ExtRational best;
  for (const auto& l : lines) best = std::min(best, ExtRational(l.at(w)));
  return best;
}

// max of the concave function min(lines) over the interval.
ExtRational envelope_max(const std::vector<Line>& lines, const Interval& iv) {
  if (lines.empty()) return ExtRational::infinity();
  ExtRational best = std::max(envelope_at(lines, iv.lo), envelope_at(lines, iv.hi));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].slope == lines[j].slope) continue;
      const Rational w = (lines[j].icpt - lines[i].icpt) / Rational(lines[i].slope - lines[j].slope);
      if (iv.contains(w)) best = std::max(best, envelope_at(lines, w));
    }
  }
  return best;
}

// { w in iv : min(lines)(w) >= level }, an interval since the envelope is concave.
std::optional<Range> superlevel(const std::vector<Line>& lines, const Interval& iv, const Rational& level) {
  Range range{iv.lo, iv.hi};
  for (const auto& l : lines) {
    if (!clip(range, Rational(-l.slope), l.icpt - level)) return std::nullopt;
  }
  return range;
}

void check_dims(const PureSeries& f, std::size_t n, const char* what) {
  if (n != static_cast<std::size_t>(f.d())) {
    throw DomainError(std::string(what) + ": dimension " + std::to_string(n) + " does not match series dimension " +
                      std::to_string(f.d()));
  }
}

HeightEntry entry_for(const PureSeries& f, int var, std::int64_t exp, const Rational& val) {
  std::vector<std::int64_t> u(static_cast<std::size_t>(f.d()), 0);
  u[static_cast<std::size_t>(var)] = exp;
  return {std::move(u), ExtRational(val)};
}

RatVector vec2(Rational a, Rational b) { return {std::move(a), std::move(b)}; }

bool on_segment(const RatVector& a, const RatVector& b, const RatVector& w) {
  const Rational cr = (b[0] - a[0]) * (w[1] - a[1]) - (b[1] - a[1]) * (w[0] - a[0]);
  if (cr != 0) return false;
  return std::min(a[0], b[0]) <= w[0] && w[0] <= std::max(a[0], b[0]) && std::min(a[1], b[1]) <= w[1] &&
         w[1] <= std::max(a[1], b[1]);
}

}  // namespace

bool TropLocus::contains(const RatVector& w) const {
  for (const auto& p : points) {
    if (p == w) return true;
  }
  if (w.size() != 2) return false;
  for (const auto& [a, b] : segments) {
    if (on_segment(a, b, w)) return true;
  }
  return false;
}

ExtRational m_w(const PureSeries& f, std::span<const Rational> w) {
  check_dims(f, w.size(), "m_w");
  ExtRational best = f.constant_val();
  for (const auto& c : f.components()) {
    best = std::min(best, envelope_at(lines_of(c), w[static_cast<std::size_t>(c.var)]));
  }
  return best;
}

VertexSet vrt_w(const PureSeries& f, std::span<const Rational> w) {
  const ExtRational m = m_w(f, w);
  VertexSet out;
  if (m.is_infinite()) return out;
  for (const auto& c : f.components()) {
    const Rational& wi = w[static_cast<std::size_t>(c.var)];
    for (const auto& [exp, val] : c.terms) {
      if (ExtRational(val + exp * wi) == m) out.push_back(entry_for(f, c.var, exp, val));
    }
  }
  if (f.constant_val() == m) out.push_back({std::vector<std::int64_t>(static_cast<std::size_t>(f.d()), 0), m});
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet vrt_box(const PureSeries& f, const BoxPolyhedron& box) {
  check_dims(f, box.dim(), "vrt_box");
  const auto d = static_cast<std::size_t>(f.d());

  // Each coordinate moves independently, so a term of component i only has to beat
  // the best value the other components can reach anywhere in their intervals.
  std::vector<std::vector<Line>> lines(d);
  std::vector<ExtRational> peak(d);
  for (std::size_t i = 0; i < d; ++i) {
    lines[i] = lines_of(f.component(static_cast<int>(i)));
    peak[i] = envelope_max(lines[i], box[i]);
  }

  VertexSet out;
  for (std::size_t i = 0; i < d; ++i) {
    ExtRational ceiling = f.constant_val();
    for (std::size_t j = 0; j < d; ++j) {
      if (j != i) ceiling = std::min(ceiling, peak[j]);
    }
    for (const auto& l : lines[i]) {
      if (active_range(l, lines[i], ceiling, {box[i].lo, box[i].hi})) {
        out.push_back(entry_for(f, static_cast<int>(i), l.slope, l.icpt));
      }
    }
  }
  if (f.constant_val().is_finite()) {
    bool reachable = true;
    for (std::size_t i = 0; i < d; ++i) reachable = reachable && f.constant_val() <= peak[i];
    if (reachable) out.push_back({std::vector<std::int64_t>(d, 0), f.constant_val()});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Lines of one coordinate together with the interval on which each is the minimum.
struct Piece {
  Line line;
  Range range;
};

std::vector<Piece> pieces_of(const std::vector<Line>& lines, const Interval& iv) {
  std::vector<Piece> out;
  for (const auto& l : lines) {
    if (auto r = active_range(l, lines, ExtRational::infinity(), {iv.lo, iv.hi})) out.push_back({l, *r});
  }
  return out;
}

void add_segment(TropLocus& locus, RatVector a, RatVector b) {
  if (a == b) {
    locus.points.push_back(std::move(a));
    return;
  }
  if (b < a) std::swap(a, b);
  locus.segments.emplace_back(std::move(a), std::move(b));
}

void normalize(TropLocus& locus) {
  std::sort(locus.segments.begin(), locus.segments.end());
  locus.segments.erase(std::unique(locus.segments.begin(), locus.segments.end()), locus.segments.end());
  std::sort(locus.points.begin(), locus.points.end());
  locus.points.erase(std::unique(locus.points.begin(), locus.points.end()), locus.points.end());
  std::erase_if(locus.points, [&](const RatVector& p) {
    return std::any_of(locus.segments.begin(), locus.segments.end(),
                       [&](const auto& s) { return on_segment(s.first, s.second, p); });
  });
}

TropLocus trop_1d(const PureSeries& f, const BoxPolyhedron& box) {
  std::vector<Line> all = lines_of(f.component(0));
  if (f.constant_val().is_finite()) all.push_back({0, f.constant_val().value()});
  TropLocus locus;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].slope == all[j].slope) continue;
      const Rational w = (all[j].icpt - all[i].icpt) / Rational(all[i].slope - all[j].slope);
      if (!box[0].contains(w)) continue;
      const RatVector pt{w};
      if (vrt_w(f, pt).size() > 1) locus.points.push_back(pt);
    }
  }
  normalize(locus);
  return locus;
}

// Within-component ties of coordinate `axis`, swept across the other coordinate.
void axis_ties(const PureSeries& f, const BoxPolyhedron& box, int axis, TropLocus& locus) {
  const int other = 1 - axis;
  const auto mine = lines_of(f.component(axis));
  const auto theirs = lines_of(f.component(other));
  const auto& iv = box[static_cast<std::size_t>(axis)];
  const auto& ov = box[static_cast<std::size_t>(other)];

  auto place = [&](const Rational& at, const Range& span) {
    RatVector a(2), b(2);
    a[static_cast<std::size_t>(axis)] = at;
    b[static_cast<std::size_t>(axis)] = at;
    a[static_cast<std::size_t>(other)] = span.lo;
    b[static_cast<std::size_t>(other)] = span.hi;
    add_segment(locus, std::move(a), std::move(b));
  };

  for (std::size_t i = 0; i < mine.size(); ++i) {
    for (std::size_t j = i + 1; j < mine.size(); ++j) {
      const Rational w = (mine[j].icpt - mine[i].icpt) / Rational(mine[i].slope - mine[j].slope);
      if (!iv.contains(w)) continue;
      const Rational level = mine[i].at(w);
      if (envelope_at(mine, w) != ExtRational(level)) continue;
      if (f.constant_val() < ExtRational(level)) continue;
      if (auto span = superlevel(theirs, ov, level)) place(w, *span);
    }
  }
  // Ties between this coordinate's minimum and the constant.
  if (f.constant_val().is_finite()) {
    const Rational& c = f.constant_val().value();
    for (const auto& piece : pieces_of(mine, iv)) {
      const Rational w = (c - piece.line.icpt) / Rational(piece.line.slope);
      if (w < piece.range.lo || w > piece.range.hi) continue;
      if (auto span = superlevel(theirs, ov, c)) place(w, *span);
    }
  }
}

TropLocus trop_2d(const PureSeries& f, const BoxPolyhedron& box) {
  TropLocus locus;
  axis_ties(f, box, 0, locus);
  axis_ties(f, box, 1, locus);

  // Cross ties m_1(w_1) = m_2(w_2) <= C, one linear piece pair at a time.
  const auto first = pieces_of(lines_of(f.component(0)), box[0]);
  const auto second = pieces_of(lines_of(f.component(1)), box[1]);
  for (const auto& p1 : first) {
    for (const auto& p2 : second) {
      // w2 = (v1 - v2 + k1 w1) / k2
      const Rational k1(p1.line.slope);
      const Rational k2(p2.line.slope);
      const Rational shift = p1.line.icpt - p2.line.icpt;
      Range r = p1.range;
      // lo2 <= (shift + k1 w1) / k2 <= hi2
      bool ok = true;
      if (k2 > 0) {
        ok = clip(r, -k1, shift - k2 * p2.range.lo) && clip(r, k1, k2 * p2.range.hi - shift);
      } else {
        ok = clip(r, k1, k2 * p2.range.lo - shift) && clip(r, -k1, shift - k2 * p2.range.hi);
      }
      if (ok && f.constant_val().is_finite()) ok = clip(r, k1, f.constant_val().value() - p1.line.icpt);
      if (!ok) continue;
      auto w2 = [&](const Rational& w1) { return (shift + k1 * w1) / k2; };
      add_segment(locus, vec2(r.lo, w2(r.lo)), vec2(r.hi, w2(r.hi)));
    }
  }
  normalize(locus);
  return locus;
}

}  // namespace

TropLocus trop_pure(const PureSeries& f, const BoxPolyhedron& box) {
  check_dims(f, box.dim(), "trop_pure");
  if (f.d() == 1) return trop_1d(f, box);
  if (f.d() == 2) return trop_2d(f, box);
  throw UnsupportedError("tropicalization is implemented for d <= 2 only");
}

LatticePolytope2 gamma_of(const VertexSet& entries) {
  std::vector<Point2> pts;
  for (const auto& e : entries) {
    if (e.u.size() > 2) throw UnsupportedError("gamma_w is implemented for d <= 2 only");
    pts.push_back({e.u[0], e.u.size() > 1 ? e.u[1] : 0});
  }
  return hull(pts);
}

LatticePolytope2 gamma_w(const PureSeries& f, std::span<const Rational> w) {
  if (f.d() > 2) throw UnsupportedError("gamma_w is implemented for d <= 2 only");
  return gamma_of(vrt_w(f, w));
}

std::int64_t disk_truncation_window(std::int64_t k, const PAdicContext& ctx) {
  if (k < 1) throw DomainError("disk truncation needs k >= 1");
  return k + delta(Rational(ctx.e()), k - 1, ctx);
}

Rational rank_favorable_width(std::int64_t r, const PAdicContext& ctx) {
  if (r < 0) throw DomainError("rank must be nonnegative");
  return 2 * mu(Rational(ctx.e()), ctx.p()) * (r + 3);
}

std::int64_t annulus_window(std::int64_t g, const PAdicContext& ctx, std::optional<std::int64_t> rank) {
  if (g < 2) throw DomainError("annulus window needs genus g >= 2");
  if (rank) return to_int64(floor_of(rank_favorable_width(*rank, ctx)));
  return 2 * n_p(Rational(1, ctx.e()), 2 * g - 2, ctx.p());
}

std::vector<std::vector<std::int64_t>> aux_support(const PureSeries& f, const BoxPolyhedron& box) {
  if (f.d() > 2) throw UnsupportedError("auxiliary supports are implemented for d <= 2 only");
  std::vector<std::vector<std::int64_t>> out;
  for (auto& e : vrt_box(f, box)) out.push_back(std::move(e.u));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace symchab
