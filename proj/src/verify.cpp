#include "symchab/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "symchab/bounds.hpp"
#include "symchab/errors.hpp"
#include "symchab/oracle.hpp"
#include "symchab/padic.hpp"

namespace symchab {

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

RatPoly r_free_part(const RatPoly& p) {
  RatPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.r == 0) out += RatPoly::monomial(c, m.g, m.t, 0);
  }
  return out;
}

std::string describe(const IntMatrix2& a) {
  return "[[" + std::to_string(a[0][0]) + "," + std::to_string(a[0][1]) + "],[" + std::to_string(a[1][0]) + "," +
         std::to_string(a[1][1]) + "]]";
}

std::string match_line(const std::string& what, const RatPoly& got, const RatPoly& want) {
  const auto diff = coeff_diff(got, want);
  if (diff.empty()) return what + ": exact match (" + std::to_string(want.terms().size()) + " coefficients)";
  return what + ": " + std::to_string(diff.size()) + " coefficient(s) differ";
}

SuiteReport theorem14() {
  SuiteReport rep;
  const RatPoly derived = aggregate_bound(5, false);
  const RatPoly published = published_aggregate();
  const RatPoly bound = eliminate_t(published);
  const RatPoly stated = published_uniform_bound();
  rep.lines.push_back(match_line("intermediate (sum of case bounds at p = 5)", derived, published));
  rep.lines.push_back(match_line("eliminate_t(intermediate)", bound, stated));
  rep.lines.push_back("bound = " + eliminate_t(derived).to_string());
  rep.details["intermediate_diff"] = coeff_diff_json(derived, published);
  rep.details["bound_diff"] = coeff_diff_json(bound, stated);
  rep.details["bound"] = poly_to_json(eliminate_t(derived));
  rep.passed = derived == published && bound == stated && eliminate_t(derived) == stated;
  return rep;
}

SuiteReport theorem15() {
  SuiteReport rep;
  const RatPoly derived_int = aggregate_bound(5, true);
  const RatPoly published_int = published_hyperelliptic_aggregate();
  const RatPoly derived = uniform_bound_polynomial(true);
  const RatPoly published = published_hyperelliptic_bound();
  rep.lines.push_back(match_line("hyperelliptic intermediate (report only)", derived_int, published_int));
  rep.lines.push_back(match_line("hyperelliptic final polynomial", derived, published));
  rep.lines.push_back("derived final = " + derived.to_string());
  rep.lines.push_back("published final = " + published.to_string());
  rep.details["intermediate_diff"] = coeff_diff_json(derived_int, published_int);
  rep.details["final_diff"] = coeff_diff_json(derived, published);
  rep.details["derived_final"] = poly_to_json(derived);
  rep.notes = discrepancy_notes(true);
  rep.passed = derived == published;
  return rep;
}

SuiteReport corollary16() {
  SuiteReport rep;
  const RatPoly derived = r_free_part(uniform_bound_polynomial(true));
  const RatPoly published_final = r_free_part(published_hyperelliptic_bound());
  const RatPoly stated = published_torsion_packet_bound();
  rep.lines.push_back(match_line("derived bound at r = 0", derived, stated));
  rep.lines.push_back(match_line("published final at r = 0 (consistency)", published_final, stated));
  rep.lines.push_back("at g = 4: derived " + compact_rational(derived.eval(4, 0, 0)) + ", published " +
                      compact_rational(stated.eval(4, 0, 0)));
  rep.details["diff"] = coeff_diff_json(derived, stated);
  rep.notes = discrepancy_notes(true);
  rep.passed = derived == stated;
  return rep;
}

SuiteReport mv_closed_forms() {
  SuiteReport rep;
  std::int64_t total = 0;
  std::int64_t mismatches = 0;
  std::int64_t proportional = 0;
  std::int64_t proportional_mismatches = 0;
  Json first = nullptr;
  IntMatrix2 a{};
  for (a[0][0] = 1; a[0][0] <= 20; ++a[0][0]) {
    for (a[0][1] = 1; a[0][1] <= 20; ++a[0][1]) {
      for (a[1][0] = 1; a[1][0] <= 20; ++a[1][0]) {
        for (a[1][1] = 1; a[1][1] <= 20; ++a[1][1]) {
          ++total;
          const Rational mv = mv_case_quadrilaterals(a);
          const Rational closed = quadrilateral_closed_form(a);
          const bool prop = a[0][0] * a[1][1] == a[0][1] * a[1][0];
          proportional += prop ? 1 : 0;
          if (mv == closed) continue;
          ++mismatches;
          proportional_mismatches += prop ? 1 : 0;
          if (first.is_null()) {
            first = {{"a", describe(a)}, {"mv", format_rational(mv)}, {"closed_form", format_rational(closed)}};
          }
        }
      }
    }
  }
  rep.lines.push_back("checked " + std::to_string(total) + " matrices with entries in [1, 20]");
  rep.lines.push_back("closed form differs on " + std::to_string(mismatches) + " of them");
  rep.lines.push_back("on rows with a11*a22 = a12*a21: " + std::to_string(proportional_mismatches) + " of " +
                      std::to_string(proportional) + " differ");
  if (!first.is_null()) {
    rep.lines.push_back("first counterexample a = " + first["a"].get<std::string>() + ": MV " +
                        first["mv"].get<std::string>() + " vs closed form " + first["closed_form"].get<std::string>());
    rep.notes.push_back(discrepancy_notes(false)[0]);
  }
  rep.details = {{"checked", total}, {"mismatches", mismatches}, {"proportional_mismatches", proportional_mismatches},
                 {"first_counterexample", first}};
  rep.passed = mismatches == 0;
  return rep;
}

LatticePolytope2 random_window(Rng& rng, std::int64_t width_cap, std::array<std::int64_t, 4>& c) {
  for (int axis = 0; axis < 2; ++axis) {
    const std::int64_t w = uniform(rng, 1, width_cap);
    const std::int64_t lo = uniform(rng, -w, 0);
    c[2 * axis] = lo;
    c[2 * axis + 1] = lo + w;
  }
  return axis_quadrilateral(c[0], c[1], c[2], c[3]);
}

SuiteReport annulus_cap(std::uint64_t seed) {
  SuiteReport rep;
  Rng rng(seed);
  std::int64_t exceed = 0;
  std::int64_t symmetric_exceed = 0;
  Json first = nullptr;
  Json per_genus = Json::object();
  for (std::int64_t g = 2; g <= 8; ++g) {
    const std::int64_t width = 8 * g - 8;
    const Rational cap(16 * (2 * g - 2) * (2 * g - 2));
    Rational worst = 0;
    std::int64_t genus_exceed = 0;
    for (int s = 0; s < 500; ++s) {
      std::array<std::int64_t, 4> c1{};
      std::array<std::int64_t, 4> c2{};
      const auto q1 = random_window(rng, width, c1);
      const auto q2 = random_window(rng, width, c2);
      const Rational mv = mixed_volume2(q1, q2);
      worst = std::max(worst, mv);
      if (mv > cap) {
        ++genus_exceed;
        if (first.is_null()) {
          first = {{"g", g}, {"window1", c1}, {"window2", c2}, {"mv", format_rational(mv)},
                   {"cap", format_rational(cap)}};
        }
      }
      // Same widths placed symmetrically about 0 (even widths only).
      auto sym = [](const std::array<std::int64_t, 4>& c) {
        const std::int64_t h1 = (c[1] - c[0]) / 2;
        const std::int64_t h2 = (c[3] - c[2]) / 2;
        return axis_quadrilateral(-h1, h1, -h2, h2);
      };
      if (mixed_volume2(sym(c1), sym(c2)) > cap) ++symmetric_exceed;
    }
    exceed += genus_exceed;
    per_genus[std::to_string(g)] = {{"cap", format_rational(cap)}, {"max_mv", format_rational(worst)},
                                    {"exceed", genus_exceed}};
    rep.lines.push_back("g = " + std::to_string(g) + ": max MV " + compact_rational(worst) + " vs cap " +
                        compact_rational(cap) + ", " + std::to_string(genus_exceed) + " of 500 above");
  }
  rep.lines.push_back("windows symmetric about 0 (informational): " + std::to_string(symmetric_exceed) +
                      " of 3500 above the cap");
  if (exceed > 0) rep.notes.push_back(discrepancy_notes(true)[3]);
  rep.details = {{"exceed", exceed}, {"symmetric_exceed", symmetric_exceed}, {"per_genus", per_genus},
                 {"first_counterexample", first}};
  rep.passed = exceed == 0;
  return rep;
}

std::vector<FfTerm> random_poly(Rng& rng, std::int64_t q) {
  std::vector<FfTerm> f;
  const auto n = uniform(rng, 2, 5);
  for (std::int64_t i = 0; i < n; ++i) f.push_back({uniform(rng, -2, 3), uniform(rng, -2, 3), uniform(rng, 1, q - 1)});
  return f;
}

// Adds a constant so that f vanishes at (x, y); negative exponents via inverses.
void plant_root(std::vector<FfTerm>& f, std::int64_t x, std::int64_t y, std::int64_t q) {
  auto pw = [q](std::int64_t b, std::int64_t e) {
    if (e < 0) {
      std::int64_t inv = 1;
      for (std::int64_t i = 0; i < q - 2; ++i) inv = inv * b % q;
      b = inv;
      e = -e;
    }
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < e; ++i) out = out * b % q;
    return out;
  };
  std::int64_t value = 0;
  for (const auto& t : f) value = (value + t.c % q * pw(x, t.ex) % q * pw(y, t.ey)) % q;
  f.push_back({0, 0, (q - value) % q});
}

SuiteReport bernstein(std::uint64_t seed) {
  SuiteReport rep;
  Rng rng(seed);
  const std::int64_t q = 101;
  std::int64_t finite = 0;
  std::int64_t attempts = 0;
  std::int64_t violations = 0;
  std::int64_t max_solutions = 0;
  std::int64_t total_solutions = 0;
  Json first = nullptr;
  while (finite < 50 && attempts < 1000) {
    ++attempts;
    FiniteFieldSystem sys{q, random_poly(rng, q), random_poly(rng, q)};
    if (attempts % 2 == 0) {
      const auto x = uniform(rng, 1, q - 1);
      const auto y = uniform(rng, 1, q - 1);
      plant_root(sys.f1, x, y, q);
      plant_root(sys.f2, x, y, q);
    }
    const auto s1 = support_of(sys.f1, q);
    const auto s2 = support_of(sys.f2, q);
    if (s1.empty() || s2.empty() || !has_finitely_many_zeros(sys)) continue;
    ++finite;
    const std::int64_t count = torus_solutions(sys);
    const Rational bound = bernstein_bound(s1, s2);
    max_solutions = std::max(max_solutions, count);
    total_solutions += count;
    if (Rational(count) > bound) {
      ++violations;
      if (first.is_null()) first = {{"system", system_to_json(sys)}, {"solutions", count}, {"mv", format_rational(bound)}};
    }
  }
  rep.lines.push_back(std::to_string(finite) + " systems with finitely many zeros over F_101 (" +
                      std::to_string(attempts) + " generated)");
  rep.lines.push_back("torus solutions: total " + std::to_string(total_solutions) + ", max " +
                      std::to_string(max_solutions));
  rep.lines.push_back(std::to_string(violations) + " system(s) above the mixed volume");
  rep.details = {{"systems", finite}, {"violations", violations}, {"first_violation", first}};
  rep.passed = finite >= 50 && violations == 0;
  return rep;
}

Rational random_rational(Rng& rng, std::int64_t range) {
  return Rational(uniform(rng, -range, range), uniform(rng, 1, 3));
}

PureSeries random_series(Rng& rng) {
  const int d = static_cast<int>(uniform(rng, 1, 2));
  const auto n = uniform(rng, 1, 20);
  std::vector<SeriesComponent> comps;
  for (int v = 0; v < d; ++v) {
    comps.push_back({v, uniform(rng, 0, 1) == 0 ? ComponentKind::disk : ComponentKind::annulus, {}});
  }
  for (std::int64_t i = 0; i < n; ++i) {
    auto& c = comps[static_cast<std::size_t>(uniform(rng, 0, d - 1))];
    std::int64_t exp = c.kind == ComponentKind::disk ? uniform(rng, 1, 12) : uniform(rng, -8, 7);
    if (exp == 0) exp = 8;
    c.terms[exp] = random_rational(rng, 12);
  }
  ExtRational constant = uniform(rng, 0, 1) == 0 ? ExtRational::infinity() : ExtRational(random_rational(rng, 6));
  return PureSeries(d, std::move(comps), constant);
}

BoxPolyhedron random_box(Rng& rng, int d) {
  std::vector<Interval> ivs;
  for (int i = 0; i < d; ++i) {
    const Rational lo = random_rational(rng, 9);
    const Rational width = uniform(rng, 0, 9) == 0 ? Rational(0) : Rational(uniform(rng, 1, 12), uniform(rng, 1, 3));
    ivs.push_back({lo, lo + width});
  }
  return BoxPolyhedron(std::move(ivs));
}

SuiteReport tropical(std::uint64_t seed) {
  SuiteReport rep;
  Rng rng(seed);
  std::int64_t grid_points = 0;
  std::int64_t vrt_mismatch = 0;
  std::int64_t box_mismatch = 0;
  std::int64_t missing_ties = 0;
  std::int64_t spurious = 0;
  Json first = nullptr;
  auto record = [&](const PureSeries& f, const BoxPolyhedron& box, const std::string& what) {
    if (first.is_null()) first = {{"series", series_to_json(f)}, {"box", box_to_json(box)}, {"failure", what}};
  };
  for (int s = 0; s < 200; ++s) {
    const PureSeries f = random_series(rng);
    const BoxPolyhedron box = random_box(rng, f.d());
    const auto grid = grid_vrt(f, box, 2);
    const TropLocus locus = trop_pure(f, box);
    std::set<HeightEntry> seen;
    for (const auto& [w, entries] : grid) {
      ++grid_points;
      if (entries != vrt_w(f, w)) {
        ++vrt_mismatch;
        record(f, box, "vrt_w differs from direct minimization");
      }
      seen.insert(entries.begin(), entries.end());
      if (entries.size() > 1 && !locus.contains(w)) {
        ++missing_ties;
        record(f, box, "grid tie outside trop_pure");
      }
    }
    const VertexSet exact = vrt_box(f, box);
    if (VertexSet(seen.begin(), seen.end()) != exact) {
      ++box_mismatch;
      record(f, box, "vrt_box differs from the grid union");
    }
    // Every reported locus point is a genuine tie inside the box.
    std::vector<RatVector> probes = locus.points;
    for (const auto& [a, b] : locus.segments) {
      probes.push_back(a);
      probes.push_back(b);
      RatVector mid(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) mid[i] = (a[i] + b[i]) / 2;
      probes.push_back(mid);
    }
    for (const auto& w : probes) {
      if (!box.contains(w) || direct_vrt(f, w).size() < 2) {
        ++spurious;
        record(f, box, "trop_pure point without a tie");
      }
    }
  }
  rep.lines.push_back("200 random pure series, " + std::to_string(grid_points) + " grid points");
  rep.lines.push_back("vrt_w vs direct minimization: " + std::to_string(vrt_mismatch) + " mismatch(es)");
  rep.lines.push_back("vrt_box vs grid union: " + std::to_string(box_mismatch) + " mismatch(es)");
  rep.lines.push_back("grid ties outside trop_pure: " + std::to_string(missing_ties));
  rep.lines.push_back("trop_pure points without a tie: " + std::to_string(spurious));
  rep.details = {{"grid_points", grid_points}, {"vrt_mismatch", vrt_mismatch}, {"box_mismatch", box_mismatch},
                 {"missing_ties", missing_ties}, {"spurious", spurious}, {"first_failure", first}};
  rep.passed = vrt_mismatch == 0 && box_mismatch == 0 && missing_ties == 0 && spurious == 0;
  return rep;
}

SuiteReport padic() {
  SuiteReport rep;
  std::int64_t cap_fail = 0;
  std::int64_t mu_fail = 0;
  std::int64_t delta_oracle_fail = 0;
  std::int64_t np_cap_fail = 0;
  std::int64_t np_oracle_fail = 0;
  std::int64_t checked = 0;
  Json failures = Json::array();
  for (std::int64_t p : {5, 7, 11}) {
    for (std::int64_t r : {1, 2}) {
      const PAdicContext ctx(p, r);
      for (std::int64_t k = 0; k <= 200; ++k) {
        ++checked;
        const std::int64_t d = delta(Rational(r), k, ctx);
        if (d > r * (k / (p - r - 1))) {
          ++cap_fail;
          failures.push_back({{"check", "delta cap"}, {"p", p}, {"r", r}, {"k", k}});
        }
        if (Rational(k + d) > mu(Rational(r), p) * k) {
          ++mu_fail;
          failures.push_back({{"check", "k + delta <= mu k"}, {"p", p}, {"r", r}, {"k", k}});
        }
      }
    }
    for (const Rational& r : {Rational(1, 2), Rational(1), Rational(2)}) {
      const PAdicContext ctx(p, 1);
      for (std::int64_t k = 0; k <= 200; ++k) {
        std::int64_t cap = to_int64(floor_of(r * Rational(k, p - 1))) + 8;
        std::int64_t brute = -1;
        while (brute < 0) {
          try {
            brute = brute_delta(r, k, ctx, cap);
          } catch (const InconclusiveError&) {
            cap *= 2;
          }
        }
        if (brute != delta(r, k, ctx)) {
          ++delta_oracle_fail;
          failures.push_back({{"check", "delta vs scan"}, {"p", p}, {"r", format_rational(r)}, {"k", k}});
        }
      }
    }
  }
  for (std::int64_t n0 = 1; n0 <= 200; ++n0) {
    if (n_p(Rational(1, 2), n0, 5) > 2 * n0) {
      ++np_cap_fail;
      failures.push_back({{"check", "N_5(1/2, n0) <= 2 n0"}, {"n0", n0}});
    }
  }
  for (std::int64_t p : {5, 7, 11}) {
    for (const Rational& r : {Rational(1, 2), Rational(1), Rational(2)}) {
      for (std::int64_t n0 = 0; n0 <= 200; ++n0) {
        ++checked;
        std::int64_t cap = 4 * n0 + 64;
        std::int64_t brute = -1;
        while (brute < 0) {
          try {
            brute = brute_np(r, n0, p, cap);
          } catch (const InconclusiveError&) {
            cap *= 2;
          }
        }
        if (brute != n_p(r, n0, p)) {
          ++np_oracle_fail;
          failures.push_back({{"check", "N_p vs scan"}, {"p", p}, {"r", format_rational(r)}, {"n0", n0}});
        }
      }
    }
  }
  rep.lines.push_back("delta <= r floor(k/(p-r-1)): " + std::to_string(cap_fail) + " failure(s)");
  rep.lines.push_back("k + delta <= mu_r k: " + std::to_string(mu_fail) + " failure(s)");
  rep.lines.push_back("delta vs definition scan: " + std::to_string(delta_oracle_fail) + " mismatch(es)");
  rep.lines.push_back("N_5(1/2, n0) <= 2 n0 for 1 <= n0 <= 200: " + std::to_string(np_cap_fail) + " failure(s)");
  rep.lines.push_back("N_p vs definition scan: " + std::to_string(np_oracle_fail) + " mismatch(es)");
  rep.details = {{"checked", checked}, {"failures", failures}};
  rep.passed = cap_fail + mu_fail + delta_oracle_fail + np_cap_fail + np_oracle_fail == 0;
  return rep;
}

RatPoly random_polynomial(Rng& rng) {
  RatPoly out;
  const auto n = uniform(rng, 1, 8);
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t num = uniform(rng, -50, 50);
    if (num == 0) num = 1;
    out += RatPoly::monomial(Rational(num, uniform(rng, 1, 9)), static_cast<int>(uniform(rng, 0, 3)),
                             static_cast<int>(uniform(rng, 0, 3)), static_cast<int>(uniform(rng, 0, 2)));
  }
  return out;
}

SuiteReport dominance(std::uint64_t seed) {
  SuiteReport rep;
  Rng rng(seed);
  std::vector<std::pair<std::string, RatPoly>> polys{
      {"published intermediate", published_aggregate()},
      {"published hyperelliptic intermediate", published_hyperelliptic_aggregate()},
      {"derived hyperelliptic intermediate", aggregate_bound(5, true)},
  };
  for (int i = 0; i < 100; ++i) polys.emplace_back("random #" + std::to_string(i), random_polynomial(rng));
  std::int64_t evaluations = 0;
  std::int64_t violations = 0;
  Json first = nullptr;
  for (const auto& [name, poly] : polys) {
    const RatPoly bound = eliminate_t(poly);
    for (std::int64_t g = 4; g <= 30; ++g) {
      for (std::int64_t t = 0; t <= g; ++t) {
        for (std::int64_t r : {std::int64_t{0}, g - 4}) {
          ++evaluations;
          if (bound.eval(g, t, r) >= poly.eval(g, t, r)) continue;
          ++violations;
          if (first.is_null()) first = {{"polynomial", name}, {"g", g}, {"t", t}, {"r", r}};
        }
      }
    }
  }
  rep.lines.push_back(std::to_string(polys.size()) + " polynomials, " + std::to_string(evaluations) +
                      " grid evaluations (4 <= g <= 30, 0 <= t <= g, r in {0, g-4})");
  rep.lines.push_back(std::to_string(violations) + " point(s) where eliminate_t(P) < P");
  rep.details = {{"evaluations", evaluations}, {"violations", violations}, {"first_violation", first}};
  rep.passed = violations == 0;
  return rep;
}

SuiteReport mixed_cap(std::uint64_t seed) {
  SuiteReport rep;
  Rng rng(seed);
  std::int64_t exceed = 0;
  std::int64_t samples = 0;
  Json first = nullptr;
  for (std::int64_t g = 2; g <= 8; ++g) {
    const std::int64_t width = 8 * g - 8;
    for (int s = 0; s < 200; ++s) {
      ++samples;
      const std::int64_t a1 = uniform(rng, 1, 20);
      const std::int64_t a2 = uniform(rng, 1, 20);
      const std::int64_t w = uniform(rng, 1, width);
      const std::int64_t lo = uniform(rng, -w, 0);
      const auto p1 = hull({{0, 0}, {a1, 0}, {0, lo}, {0, lo + w}});
      const auto p2 = hull({{0, 0}, {a2, 0}, {0, lo}, {0, lo + w}});
      const Rational mv = mixed_volume2(p1, p2);
      const Rational cap((4 * g - 4) * (a1 + a2));
      if (mv <= cap) continue;
      ++exceed;
      if (first.is_null()) {
        first = {{"g", g}, {"a", {a1, a2}}, {"window", {lo, lo + w}}, {"mv", format_rational(mv)},
                 {"cap", format_rational(cap)}};
      }
    }
  }
  rep.lines.push_back(std::to_string(exceed) + " of " + std::to_string(samples) +
                      " shared-window pairs above (4g-4)(a1+a2)");
  if (exceed > 0) rep.notes.push_back(discrepancy_notes(false)[1]);
  rep.details = {{"samples", samples}, {"exceed", exceed}, {"first_counterexample", first}};
  rep.passed = exceed == 0;
  return rep;
}

// Random split of at most `budget` into `slots` nonnegative parts.
std::vector<OrderPair> random_orders(Rng& rng, std::int64_t slots, std::int64_t budget) {
  std::vector<OrderPair> out(static_cast<std::size_t>(slots), OrderPair{0, 0});
  if (slots == 0) return out;
  for (int i = 0; i < 2; ++i) {
    std::int64_t left = uniform(rng, 0, budget);
    while (left > 0) {
      const auto chunk = uniform(rng, 1, left);
      out[static_cast<std::size_t>(uniform(rng, 0, slots - 1))][static_cast<std::size_t>(i)] += chunk;
      left -= chunk;
    }
  }
  return out;
}

SuiteReport budget(std::uint64_t seed) {
  SuiteReport rep;
  Rng rng(seed);
  std::int64_t runs = 0;
  std::int64_t over = 0;
  Json worst = Json::object();
  for (std::int64_t g = 4; g <= 5; ++g) {
    for (std::int64_t t : {std::int64_t{0}, std::int64_t{1}, g}) {
      const PartitionCounts pc = partition_counts(5, g, t);
      const auto d1 = to_int64(floor_of(pc.d1.eval(0, 0, 0)));
      const auto pairs = to_int64(floor_of(pc.d2.eval(0, 0, 0) / 2));
      for (bool fav : {false, true}) {
        for (auto id : kAllCases) {
          const std::int64_t slots = id == CaseId::c1a ? pairs : d1;
          const std::int64_t cap = id == CaseId::c1a ? g - 1 : 2 * g - 2;
          for (int s = 0; s < 3; ++s) {
            auto orders = random_orders(rng, slots, cap);
            if (s == 0 && slots > 0) {
              std::fill(orders.begin(), orders.end(), OrderPair{0, 0});
              orders[0] = {cap, cap};
            }
            const SweepResult res = budget_sweep(id, 5, g, t, g - 4, fav, orders);
            ++runs;
            const std::string key = std::string(case_label(id)) + (fav ? "/rank-favorable" : "/general");
            const Rational ratio = res.total / res.closed_form;
            if (!worst.contains(key) || parse_rational(worst[key].get<std::string>()) < ratio) {
              worst[key] = format_rational(ratio);
            }
            if (!res.within) ++over;
          }
        }
      }
    }
  }
  rep.lines.push_back(std::to_string(runs) + " order distributions swept, " + std::to_string(over) +
                      " above the case closed form");
  for (const auto& [key, value] : worst.items()) {
    rep.lines.push_back(key + ": max tube total / closed form = " + value.get<std::string>());
  }
  rep.details = {{"runs", runs}, {"over", over}, {"max_ratio", worst}};
  rep.passed = over == 0;
  return rep;
}

using SuiteFn = std::function<SuiteReport(std::uint64_t)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"theorem14", [](std::uint64_t) { return theorem14(); }},
      {"theorem15", [](std::uint64_t) { return theorem15(); }},
      {"corollary16", [](std::uint64_t) { return corollary16(); }},
      {"mv-closed-forms", [](std::uint64_t) { return mv_closed_forms(); }},
      {"annulus-cap", annulus_cap},
      {"bernstein", bernstein},
      {"tropical", tropical},
      {"padic", [](std::uint64_t) { return padic(); }},
      {"dominance", dominance},
      {"mixed-cap", mixed_cap},
      {"budget", budget},
  };
  return suites;
}

SuiteReport timed(const std::string& name, const SuiteFn& fn, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport rep = fn(seed);
  rep.name = name;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  out.emplace_back("all");
  return out;
}

std::vector<SuiteReport> run_suite(std::string_view name, std::uint64_t seed) {
  std::vector<SuiteReport> out;
  for (const auto& [n, fn] : registry()) {
    if (name == "all" || name == n) out.push_back(timed(n, fn, seed));
  }
  if (out.empty()) throw DomainError("unknown verification suite \"" + std::string(name) + "\"");
  return out;
}

Json report_to_json(const SuiteReport& report) {
  return {{"suite", report.name}, {"passed", report.passed}, {"lines", report.lines}, {"notes", report.notes},
          {"details", report.details}};
}

Json coeff_diff_json(const RatPoly& p, const RatPoly& q) {
  Json out = Json::object();
  const auto diff = coeff_diff(p, q);
  for (auto it = diff.rbegin(); it != diff.rend(); ++it) out[monomial_name(it->first)] = format_rational(it->second);
  return out;
}

}  // namespace symchab
