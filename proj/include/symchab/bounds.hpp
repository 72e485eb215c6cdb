#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symchab/polytope.hpp"
#include "symchab/rational.hpp"
#include "symchab/symbolic.hpp"

namespace symchab {

/// Reduction type of a point of the symmetric square.
///  1: conjugate pair over F_{p^2}; 2: doubled F_p point; 3: two distinct F_p points.
///  a: smooth points (disks), b: nodes (annuli), 3c: one of each.
enum class CaseId { c1a, c1b, c2a, c2b, c3a, c3b, c3c };

inline constexpr std::array<CaseId, 7> kAllCases = {CaseId::c1a, CaseId::c1b, CaseId::c2a, CaseId::c2b,
                                                    CaseId::c3a, CaseId::c3b, CaseId::c3c};

std::string_view case_label(CaseId id);
CaseId parse_case(std::string_view label);
std::int64_t case_ramification(CaseId id);
bool is_annulus_case(CaseId id);

/// Disk and annulus counts, symbolic in g and t (numeric instances are constant polynomials).
struct PartitionCounts {
  std::int64_t p = 5;
  RatPoly d1;     // Q_p residue disks
  RatPoly d2;     // Q_{p^2} residue disks
  RatPoly alpha;  // annuli
};

PartitionCounts partition_counts(std::int64_t p);
PartitionCounts partition_counts(std::int64_t p, const Rational& g, const Rational& t);

/// Number of residue tubes of each reduction type.
std::map<CaseId, RatPoly> tube_counts(const PartitionCounts& pc);

/// Total zero count contributed by one reduction type, symbolic in g, t, r.
/// The annulus types 1b, 2b, 3b are the three summands of their joint row.
RatPoly case_bound(CaseId id, std::int64_t p, bool rank_favorable);
Rational case_bound(CaseId id, std::int64_t p, const Rational& g, const Rational& t, const Rational& r,
                    bool rank_favorable);

/// Rows of the zero-count table; the annulus types share one row.
enum class ZeroRow { r1a, r2a, r3a, annuli, r3c };
inline constexpr std::array<ZeroRow, 5> kAllRows = {ZeroRow::r1a, ZeroRow::r2a, ZeroRow::r3a, ZeroRow::annuli,
                                                    ZeroRow::r3c};
std::string_view row_label(ZeroRow row);
RatPoly row_bound(ZeroRow row, std::int64_t p, bool rank_favorable);

struct CaseBound {
  CaseId case_id;
  RatPoly tube_count;
  RatPoly zero_bound;
  bool hyperelliptic = false;
};

std::vector<CaseBound> case_table(std::int64_t p, bool hyperelliptic);

/// Sum of all rows: the bound before t is eliminated.
RatPoly aggregate_bound(std::int64_t p, bool hyperelliptic);

/// eliminate_t(aggregate_bound(5, hyperelliptic)).
RatPoly uniform_bound_polynomial(bool hyperelliptic);

/// Needs g >= 4 and 0 <= r <= g - 4 (RankConditionError otherwise).
Rational uniform_bound(std::int64_t g, bool hyperelliptic, std::int64_t r);

/// Published polynomials, transcribed verbatim. The hyperelliptic intermediate
/// reads its g^3 coefficient as 128 (printed as 128/g^3).
RatPoly published_aggregate();
RatPoly published_uniform_bound();
RatPoly published_hyperelliptic_aggregate();
RatPoly published_hyperelliptic_bound();
RatPoly published_torsion_packet_bound();

/// Zero count of a single residue tube before summation. `k` holds
/// k_ij = ord_{P_j} omega_i + 1 (only column 0 is read for 3c, nothing for annuli).
Rational tube_zero_bound(CaseId id, const IntMatrix2& k, std::int64_t g, std::int64_t r, std::int64_t p,
                         bool rank_favorable);

/// (ord_P omega_1, ord_P omega_2) at one smooth point.
using OrderPair = std::array<std::int64_t, 2>;

struct SweepResult {
  Rational total;        // sum of tube_zero_bound over every tube
  Rational closed_form;  // case_bound at the same parameters
  std::int64_t tubes = 0;
  bool within = false;   // total <= closed_form
};

/// Sums per-tube bounds over all tubes of one type for a given distribution of
/// vanishing orders. For 1a `orders` lists one entry per conjugate pair (the order at
/// P equals the order at its conjugate), otherwise one per Q_p disk; annulus types
/// ignore it. Throws BudgetError if sum ord omega_i exceeds 2g - 2.
SweepResult budget_sweep(CaseId id, std::int64_t p, std::int64_t g, std::int64_t t, std::int64_t r,
                         bool rank_favorable, std::span<const OrderPair> orders);

/// Known disagreements between the published formulas and exact recomputation.
std::vector<std::string> discrepancy_notes(bool hyperelliptic);

}  // namespace symchab
