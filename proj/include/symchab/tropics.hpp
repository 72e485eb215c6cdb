#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "symchab/padic.hpp"
#include "symchab/polytope.hpp"
#include "symchab/rational.hpp"
#include "symchab/series.hpp"

namespace symchab {

using RatVector = std::vector<Rational>;

/// Height entries attaining m_w, sorted.
using VertexSet = std::vector<HeightEntry>;

/// Closure of the tie locus: isolated points plus closed segments inside the box.
struct TropLocus {
  std::vector<RatVector> points;
  std::vector<std::pair<RatVector, RatVector>> segments;

  bool empty() const { return points.empty() && segments.empty(); }
  bool contains(const RatVector& w) const;
};

/// min over H(f) of val + <u, w>; +infinity for the empty series.
ExtRational m_w(const PureSeries& f, std::span<const Rational> w);

VertexSet vrt_w(const PureSeries& f, std::span<const Rational> w);

/// Union of vrt_w over every w in the box, computed exactly.
VertexSet vrt_box(const PureSeries& f, const BoxPolyhedron& box);

/// Closure of { w in box : #vrt_w(f) > 1 } for d <= 2.
TropLocus trop_pure(const PureSeries& f, const BoxPolyhedron& box);

/// Exponent projection of conv(vrt_w(f)); one-variable series live on the x-axis.
LatticePolytope2 gamma_w(const PureSeries& f, std::span<const Rational> w);
LatticePolytope2 gamma_of(const VertexSet& entries);

/// Exponent cutoff k + delta(e, k - 1) past which disk terms never enter vrt_w for
/// w > 1/e. Also bounded by mu_e k.
std::int64_t disk_truncation_window(std::int64_t k, const PAdicContext& ctx);

/// Width of the exponent window for an annulus expansion: 2 N_p(1/e, 2g - 2) in
/// general, floor(2 mu_e (r + 3)) when a rank r is supplied.
std::int64_t annulus_window(std::int64_t g, const PAdicContext& ctx, std::optional<std::int64_t> rank = std::nullopt);

/// Exact rank-favorable width 2 mu_e (r + 3).
Rational rank_favorable_width(std::int64_t r, const PAdicContext& ctx);

/// Exponent support of the auxiliary polynomials: pi(vrt_box(f, box)), sorted.
std::vector<std::vector<std::int64_t>> aux_support(const PureSeries& f, const BoxPolyhedron& box);

}  // namespace symchab
