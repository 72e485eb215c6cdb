#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "symchab/padic.hpp"
#include "symchab/polytope.hpp"
#include "symchab/series.hpp"
#include "symchab/tropics.hpp"

namespace symchab {

/// c x^ex y^ey with c read modulo q.
struct FfTerm {
  std::int64_t ex = 0;
  std::int64_t ey = 0;
  std::int64_t c = 0;
};

/// Two bivariate Laurent polynomials over F_q. q prime, |exponent| <= 30.
struct FiniteFieldSystem {
  std::int64_t q = 2;
  std::vector<FfTerm> f1;
  std::vector<FfTerm> f2;
};

/// Throws DomainError unless q is a prime <= 2000 and exponents are in range.
void validate_system(const FiniteFieldSystem& sys);

/// Common zeros in (F_q^*)^2, counted without multiplicity. Exhaustive scan.
std::int64_t torus_solutions(const FiniteFieldSystem& sys);

/// True iff the two polynomials share no curve component: both Res_x and Res_y of the
/// monomial-cleared polynomials are nonzero. Throws DomainError if both are zero.
bool has_finitely_many_zeros(const FiniteFieldSystem& sys);

/// Exponent supports after reduction mod q (zero coefficients dropped).
std::vector<Point2> support_of(const std::vector<FfTerm>& f, std::int64_t q);

/// vrt_w by direct minimization over H(f) at every point of a grid built from the box
/// corners, per-component breakpoints, constant ties and cross-component tie levels,
/// with every axis gap further split into `refinement` equal parts.
std::map<RatVector, VertexSet> grid_vrt(const PureSeries& f, const BoxPolyhedron& box, std::int64_t refinement);

/// Entries of H(f) minimizing val + <u, w>, straight from the definition.
VertexSet direct_vrt(const PureSeries& f, const RatVector& w);

/// Definition-level delta: scans N < cap, then certifies that no N >= cap qualifies.
/// Throws InconclusiveError if the certificate fails at the cap.
std::int64_t brute_delta(const Rational& r, std::int64_t k, const PAdicContext& ctx, std::int64_t cap);

/// Definition-level N_p: last failing n in [1, cap] plus one. Throws InconclusiveError
/// when a failure sits in the upper half of the scan.
std::int64_t brute_np(const Rational& r, std::int64_t n0, std::int64_t p, std::int64_t cap);

}  // namespace symchab
