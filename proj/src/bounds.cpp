#include "symchab/bounds.hpp"

#include <tuple>

#include "symchab/errors.hpp"
#include "symchab/padic.hpp"
#include "symchab/tropics.hpp"

namespace symchab {

namespace {

const RatPoly kG = RatPoly::var_g();
const RatPoly kT = RatPoly::var_t();
const RatPoly kR = RatPoly::var_r();

void check_prime(std::int64_t p) {
  if (!is_prime(p) || p < 5) throw DomainError("p must be a prime >= 5, got " + std::to_string(p));
}

void check_numeric(const Rational& g, const Rational& t) {
  if (g < 2) throw DomainError("genus must satisfy g >= 2");
  if (t < 0 || t > g) throw DomainError("Stoll's parameter must satisfy 0 <= t <= g");
}

// mu_1 and mu_2 at p, exact.
Rational mu1(std::int64_t p) { return mu(Rational(1), p); }
Rational mu2(std::int64_t p) { return mu(Rational(2), p); }

RatPoly terms(std::initializer_list<std::tuple<Rational, int, int, int>> list) {
  RatPoly out;
  for (const auto& [c, g, t, r] : list) out += RatPoly::monomial(c, g, t, r);
  return out;
}

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

}  // namespace

std::string_view case_label(CaseId id) {
  switch (id) {
    case CaseId::c1a: return "1a";
    case CaseId::c1b: return "1b";
    case CaseId::c2a: return "2a";
    case CaseId::c2b: return "2b";
    case CaseId::c3a: return "3a";
    case CaseId::c3b: return "3b";
    case CaseId::c3c: return "3c";
  }
  return "?";
}

CaseId parse_case(std::string_view label) {
  for (auto id : kAllCases) {
    if (case_label(id) == label) return id;
  }
  throw DomainError("unknown case \"" + std::string(label) + "\"");
}

std::int64_t case_ramification(CaseId id) { return (id == CaseId::c2a || id == CaseId::c2b) ? 2 : 1; }

bool is_annulus_case(CaseId id) { return id == CaseId::c1b || id == CaseId::c2b || id == CaseId::c3b; }

PartitionCounts partition_counts(std::int64_t p) {
  check_prime(p);
  const RatPoly g1 = kG - RatPoly(1);
  const RatPoly t1 = kT - RatPoly(1);
  PartitionCounts pc;
  pc.p = p;
  pc.d1 = RatPoly(5 * p + 2) * g1 - RatPoly(3 * p) * t1;
  pc.d2 = RatPoly(5 * p * p + 2) * g1 - RatPoly(3 * p * p) * t1;
  pc.alpha = RatPoly(2) * g1 + t1;
  return pc;
}

PartitionCounts partition_counts(std::int64_t p, const Rational& g, const Rational& t) {
  check_numeric(g, t);
  PartitionCounts pc = partition_counts(p);
  pc.d1 = RatPoly(pc.d1.eval(g, t, 0));
  pc.d2 = RatPoly(pc.d2.eval(g, t, 0));
  pc.alpha = RatPoly(pc.alpha.eval(g, t, 0));
  return pc;
}

std::map<CaseId, RatPoly> tube_counts(const PartitionCounts& pc) {
  const Rational half(1, 2);
  return {
      {CaseId::c1a, pc.d2.scale(half)},   {CaseId::c1b, pc.alpha.scale(half)},
      {CaseId::c2a, pc.d1},               {CaseId::c2b, pc.alpha},
      {CaseId::c3a, binom2(pc.d1)},       {CaseId::c3b, binom2(pc.alpha)},
      {CaseId::c3c, pc.d1 * pc.alpha},
  };
}

RatPoly case_bound(CaseId id, std::int64_t p, bool rank_favorable) {
  const PartitionCounts pc = partition_counts(p);
  const RatPoly& d1 = pc.d1;
  const RatPoly& d2 = pc.d2;
  const RatPoly& alpha = pc.alpha;
  const RatPoly m1(mu1(p));
  const RatPoly m2(mu2(p));
  const RatPoly half(Rational(1, 2));
  const RatPoly two_g_2 = RatPoly(2) * kG - RatPoly(2);
  const RatPoly two_g_1 = RatPoly(2) * kG - RatPoly(1);
  const RatPoly rank3 = kR + RatPoly(3);

  switch (id) {
    case CaseId::c1a:
      return m1 * m1 * half * (d2 + two_g_1 * two_g_1);
    case CaseId::c2a:
      return m2 * m2 * (d1 + two_g_1 * two_g_1) + RatPoly(4) * m2 * (two_g_2 + d1) - RatPoly(4) * d1;
    case CaseId::c3a: {
      const RatPoly pairs = binom2(d1);
      const RatPoly s = two_g_2 + d1;
      return m1 * m1 * half * s * s +
             m1 * ((RatPoly(4) * kG - RatPoly(4)) * (d1 - RatPoly(1)) + RatPoly(4) * pairs) -
             RatPoly(4) * pairs;
    }
    case CaseId::c1b:
    case CaseId::c2b:
    case CaseId::c3b: {
      const RatPoly count = id == CaseId::c1b ? alpha * half : id == CaseId::c2b ? alpha : binom2(alpha);
      if (!rank_favorable) return RatPoly(16) * two_g_2 * two_g_2 * count;
      const RatPoly m = id == CaseId::c2b ? m2 : m1;
      return RatPoly(8) * m * rank3 * two_g_2 * count;
    }
    case CaseId::c3c: {
      const RatPoly inner = alpha * m1 * two_g_2 + (m1 + RatPoly(1)) * d1 * alpha;
      if (!rank_favorable) return (RatPoly(8) * kG - RatPoly(8)) * inner;
      return RatPoly(2) * m1 * rank3 * inner;
    }
  }
  throw DomainError("unknown case");
}

Rational case_bound(CaseId id, std::int64_t p, const Rational& g, const Rational& t, const Rational& r,
                    bool rank_favorable) {
  check_numeric(g, t);
  if (r < 0) throw DomainError("rank must be nonnegative");
  return case_bound(id, p, rank_favorable).eval(g, t, r);
}

std::string_view row_label(ZeroRow row) {
  switch (row) {
    case ZeroRow::r1a: return "1a";
    case ZeroRow::r2a: return "2a";
    case ZeroRow::r3a: return "3a";
    case ZeroRow::annuli: return "1b,2b,3b";
    case ZeroRow::r3c: return "3c";
  }
  return "?";
}

RatPoly row_bound(ZeroRow row, std::int64_t p, bool rank_favorable) {
  switch (row) {
    case ZeroRow::r1a: return case_bound(CaseId::c1a, p, rank_favorable);
    case ZeroRow::r2a: return case_bound(CaseId::c2a, p, rank_favorable);
    case ZeroRow::r3a: return case_bound(CaseId::c3a, p, rank_favorable);
    case ZeroRow::annuli:
      return case_bound(CaseId::c1b, p, rank_favorable) + case_bound(CaseId::c2b, p, rank_favorable) +
             case_bound(CaseId::c3b, p, rank_favorable);
    case ZeroRow::r3c: return case_bound(CaseId::c3c, p, rank_favorable);
  }
  throw DomainError("unknown row");
}

std::vector<CaseBound> case_table(std::int64_t p, bool hyperelliptic) {
  const auto counts = tube_counts(partition_counts(p));
  std::vector<CaseBound> out;
  for (auto id : kAllCases) out.push_back({id, counts.at(id), case_bound(id, p, hyperelliptic), hyperelliptic});
  return out;
}

RatPoly aggregate_bound(std::int64_t p, bool hyperelliptic) {
  RatPoly sum;
  for (auto row : kAllRows) sum += row_bound(row, p, hyperelliptic);
  return sum;
}

RatPoly uniform_bound_polynomial(bool hyperelliptic) { return eliminate_t(aggregate_bound(5, hyperelliptic)); }

Rational uniform_bound(std::int64_t g, bool hyperelliptic, std::int64_t r) {
  if (g < 4) throw DomainError("uniform bounds need g >= 4");
  if (r < 0) throw DomainError("rank must be nonnegative");
  if (r > g - 4) {
    throw RankConditionError("rank condition r ≤ g−4 violated (r = " + std::to_string(r) +
                             ", g−4 = " + std::to_string(g - 4) + ")");
  }
  return uniform_bound_polynomial(hyperelliptic).eval(g, 0, r);
}

RatPoly published_aggregate() {
  return terms({{q(128), 4, 0, 0},
                {q(128), 3, 1, 0},
                {q(32), 2, 2, 0},
                {q(1616, 3), 3, 0, 0},
                {q(-1256, 3), 2, 1, 0},
                {q(-344), 1, 2, 0},
                {q(-8858, 9), 2, 0, 0},
                {q(-380), 1, 1, 0},
                {q(662), 0, 2, 0},
                {q(11654, 9), 1, 0, 0},
                {q(-206), 0, 1, 0},
                {q(-4012, 9), 0, 0, 0}});
}

RatPoly published_uniform_bound() {
  return terms({{q(288), 4, 0, 0},
                {q(1616, 3), 3, 0, 0},
                {q(-2900, 9), 2, 0, 0},
                {q(11654, 9), 1, 0, 0},
                {q(-4012, 9), 0, 0, 0}});
}

RatPoly published_hyperelliptic_aggregate() {
  return terms({{q(128, 3), 3, 0, 1},
                {q(128, 3), 2, 1, 1},
                {q(32, 3), 1, 2, 1},
                {q(128), 3, 0, 0},
                {q(128), 2, 1, 0},
                {q(32), 1, 2, 0},
                {q(2192, 9), 2, 0, 1},
                {q(-776, 9), 1, 1, 1},
                {q(-104), 0, 2, 1},
                {q(69353, 36), 2, 0, 0},
                {q(-8807, 6), 1, 1, 0},
                {q(-23, 4), 0, 2, 0},
                {q(-5624, 9), 1, 0, 1},
                {q(2072, 9), 0, 1, 1},
                {q(-99575, 36), 1, 0, 0},
                {q(4531, 4), 0, 1, 0},
                {q(736, 3), 0, 0, 1},
                {q(8053, 9), 0, 0, 0}});
}

RatPoly published_hyperelliptic_bound() {
  return terms({{q(96), 3, 0, 1},
                {q(288), 3, 0, 0},
                {q(2192, 9), 2, 0, 1},
                {q(69353, 36), 2, 0, 0},
                {q(-1184, 3), 1, 0, 1},
                {q(-14699, 9), 1, 0, 0},
                {q(736, 3), 0, 0, 1},
                {q(8053, 9), 0, 0, 0}});
}

RatPoly published_torsion_packet_bound() {
  return terms({{q(288), 3, 0, 0}, {q(69353, 36), 2, 0, 0}, {q(-14699, 9), 1, 0, 0}, {q(8053, 9), 0, 0, 0}});
}

namespace {

std::int64_t truncation_degree(std::int64_t k, std::int64_t e, std::int64_t p) {
  return disk_truncation_window(k, PAdicContext(p, e));
}

// Exponent window of width w placed symmetrically about 0.
std::pair<std::int64_t, std::int64_t> centered(std::int64_t w) { return {-(w / 2), w - w / 2}; }

}  // namespace

Rational tube_zero_bound(CaseId id, const IntMatrix2& k, std::int64_t g, std::int64_t r, std::int64_t p,
                         bool rank_favorable) {
  for (const auto& row : k) {
    for (auto x : row) {
      if (x < 1) throw DomainError("k_ij = ord omega + 1 must be at least 1");
    }
  }
  if (g < 2) throw DomainError("genus must satisfy g >= 2");
  if (r < 0) throw DomainError("rank must be nonnegative");
  check_prime(p);
  const std::int64_t e = case_ramification(id);
  const PAdicContext ctx(p, e);
  const std::int64_t general_width = 8 * g - 8;
  const std::int64_t rank_width = to_int64(floor_of(rank_favorable_width(r, ctx)));

  auto a_of = [&](std::int64_t kij) { return truncation_degree(kij, e, p); };

  switch (id) {
    case CaseId::c1a:
    case CaseId::c2a:
    case CaseId::c3a: {
      IntMatrix2 a{};
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) a[i][j] = a_of(k[i][j]);
      }
      Rational count = mv_case_quadrilaterals(a) + 1;  // torus zeros plus the origin
      if (id != CaseId::c1a) {
        // Zeros with exactly one coordinate 0, counted on the axis edges.
        for (const auto& row : a) {
          for (auto x : row) count += x - 1;
        }
      }
      if (id == CaseId::c2a) {
        // Two ramified extensions, each zero counted twice by the ordered pullback.
        const std::array<std::int64_t, 1> swap{2};
        count = count * 2 / Rational(multiplicity_factor(swap));
      }
      return count;
    }
    case CaseId::c1b:
    case CaseId::c2b:
    case CaseId::c3b: {
      const std::int64_t w1 = general_width;
      const std::int64_t w2 = rank_favorable ? rank_width : general_width;
      const auto [lo1, hi1] = centered(w1);
      const auto [lo2, hi2] = centered(w2);
      const auto window = axis_quadrilateral(lo1, hi1, lo2, hi2);
      Rational count = mixed_volume2(window, window);
      if (id == CaseId::c2b) {
        const std::array<std::int64_t, 1> swap{2};
        count = count * 2 / Rational(multiplicity_factor(swap));
      }
      return count;
    }
    case CaseId::c3c: {
      const std::int64_t w = rank_favorable ? rank_width : general_width;
      const auto [lo, hi] = centered(w);
      const auto first = hull({{0, 0}, {a_of(k[0][0]), 0}, {0, lo}, {0, hi}});
      const auto second = hull({{0, 0}, {a_of(k[1][0]), 0}, {0, lo}, {0, hi}});
      // Degenerate zeros lie on t_1 = 0, common zeros of the two annulus series.
      return mixed_volume2(first, second) + w;
    }
  }
  throw DomainError("unknown case");
}

SweepResult budget_sweep(CaseId id, std::int64_t p, std::int64_t g, std::int64_t t, std::int64_t r,
                         bool rank_favorable, std::span<const OrderPair> orders) {
  const PartitionCounts pc = partition_counts(p, g, t);
  const Integer d1 = numerator(pc.d1.eval(0, 0, 0));
  const Integer alpha = numerator(pc.alpha.eval(0, 0, 0));
  const Integer conj_pairs = floor_of(pc.d2.eval(0, 0, 0) / 2);

  const std::int64_t weight = id == CaseId::c1a ? 2 : 1;
  std::array<std::int64_t, 2> used{0, 0};
  for (const auto& o : orders) {
    for (int i = 0; i < 2; ++i) {
      if (o[i] < 0) throw BudgetError("orders of vanishing must be nonnegative");
      used[i] += weight * o[i];
    }
  }
  for (int i = 0; i < 2; ++i) {
    if (used[i] > 2 * g - 2) {
      throw BudgetError("differential " + std::to_string(i + 1) + " vanishes to total order " +
                        std::to_string(used[i]) + " > 2g-2 = " + std::to_string(2 * g - 2));
    }
  }

  auto need_points = [&](const Integer& n) {
    if (Integer(orders.size()) != n) {
      throw DomainError("case " + std::string(case_label(id)) + " needs " + n.str() + " order entries, got " +
                        std::to_string(orders.size()));
    }
  };
  auto diag = [](const OrderPair& o) { return IntMatrix2{{{o[0] + 1, o[0] + 1}, {o[1] + 1, o[1] + 1}}}; };

  SweepResult out;
  switch (id) {
    case CaseId::c1a:
      need_points(conj_pairs);
      for (const auto& o : orders) out.total += tube_zero_bound(id, diag(o), g, r, p, rank_favorable);
      out.tubes = static_cast<std::int64_t>(orders.size());
      break;
    case CaseId::c2a:
      need_points(d1);
      for (const auto& o : orders) out.total += tube_zero_bound(id, diag(o), g, r, p, rank_favorable);
      out.tubes = static_cast<std::int64_t>(orders.size());
      break;
    case CaseId::c3a:
      need_points(d1);
      for (std::size_t i = 0; i < orders.size(); ++i) {
        for (std::size_t j = i + 1; j < orders.size(); ++j) {
          const IntMatrix2 k{{{orders[i][0] + 1, orders[j][0] + 1}, {orders[i][1] + 1, orders[j][1] + 1}}};
          out.total += tube_zero_bound(id, k, g, r, p, rank_favorable);
          ++out.tubes;
        }
      }
      break;
    case CaseId::c3c:
      need_points(d1);
      for (const auto& o : orders) out.total += tube_zero_bound(id, diag(o), g, r, p, rank_favorable) * Rational(alpha);
      out.tubes = to_int64(Integer(orders.size()) * alpha);
      break;
    case CaseId::c1b:
    case CaseId::c2b:
    case CaseId::c3b: {
      const Integer count = floor_of(tube_counts(pc).at(id).eval(0, 0, 0));
      const IntMatrix2 ones{{{1, 1}, {1, 1}}};
      out.total = tube_zero_bound(id, ones, g, r, p, rank_favorable) * Rational(count);
      out.tubes = to_int64(count);
      break;
    }
  }
  out.closed_form = case_bound(id, p, g, t, r, rank_favorable);
  out.within = out.total <= out.closed_form;
  return out;
}

std::vector<std::string> discrepancy_notes(bool hyperelliptic) {
  std::vector<std::string> notes{
      "disk-case mixed volume: exact MV(X1,X2) = max(a11*a22, a12*a21) - 1, which exceeds the published closed form "
      "(Per(a)-2)/2 unless a11*a22 = a12*a21; the case totals use the published per-case formulas",
      "mixed-case mixed volume: for conv(0, a_i e1, c1 e2, c2 e2) sharing a window of width W the exact value is "
      "W*max(a1,a2), above the published (W/2)(a1+a2) unless a1 = a2",
  };
  if (hyperelliptic) {
    notes.emplace_back(
        "published hyperelliptic intermediate prints the g^3 coefficient as 128/g^3; read as 128g^3");
    notes.emplace_back(
        "published annulus inequality 8(4g-4)(mu_e(r+3)) <= 8mu_e(r+3)(2g-2) is inconsistent (left side is twice "
        "the right); summands use 8mu_e(r+3)(2g-2), which equals the exact mixed area W1*W2 for windows symmetric "
        "about 0; windows merely containing 0 can reach 2*W1*W2");
    notes.emplace_back(
        "published hyperelliptic intermediate is not the sum of the displayed case bounds: its r-free part differs "
        "by -(7247g^2 - 6630gt - 6065g + 1575t^2 + 2685t + 1276)/36; bounds reported here are recomputed from the "
        "case bounds");
  }
  return notes;
}

}  // namespace symchab
