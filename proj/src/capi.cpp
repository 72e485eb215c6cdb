#include "symchab/symchab.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include "symchab/bounds.hpp"
#include "symchab/errors.hpp"
#include "symchab/json_io.hpp"
#include "symchab/oracle.hpp"
#include "symchab/tropics.hpp"
#include "symchab/verify.hpp"

struct symchab_series {
  symchab::PureSeries value;
};
struct symchab_box {
  symchab::BoxPolyhedron value;
};
struct symchab_poly {
  symchab::RatPoly value;
};
struct symchab_report {
  std::vector<symchab::SuiteReport> suites;
};

namespace {

using namespace symchab;

thread_local std::string last_error;

int fail(int code, const char* what) {
  last_error = what;
  return code;
}

// Runs `body`, translating library exceptions into status codes.
template <typename Body>
int guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return SYMCHAB_OK;
  } catch (const RankConditionError& e) {
    return fail(SYMCHAB_ERR_RANK_CONDITION, e.what());
  } catch (const ParseError& e) {
    return fail(SYMCHAB_ERR_PARSE, e.what());
  } catch (const UnsupportedError& e) {
    return fail(SYMCHAB_ERR_UNSUPPORTED, e.what());
  } catch (const InconclusiveError& e) {
    return fail(SYMCHAB_ERR_INCONCLUSIVE, e.what());
  } catch (const BudgetError& e) {
    return fail(SYMCHAB_ERR_BUDGET, e.what());
  } catch (const DomainError& e) {
    return fail(SYMCHAB_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(SYMCHAB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SYMCHAB_ERR_INTERNAL, "unknown failure");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put_envelope(char** out, Json payload, const std::vector<std::string>& notes = {}) {
  Json env = {{"payload", std::move(payload)}, {"notes", notes}};
  *out = dup_string(env.dump());
}

bool any_null() { return false; }
template <typename T, typename... Rest>
bool any_null(const T* p, const Rest*... rest) {
  return p == nullptr || any_null(rest...);
}

#define SYMCHAB_REQUIRE(...) \
  if (any_null(__VA_ARGS__)) return fail(SYMCHAB_ERR_NULL_PTR, "null pointer argument")

Json rat(const Rational& q) { return format_rational(q); }

Json exponent_list(const std::vector<std::vector<std::int64_t>>& support) {
  Json out = Json::array();
  for (const auto& u : support) out.push_back(u);
  return out;
}

}  // namespace

extern "C" {

const char* symchab_version(void) { return "0.1.0"; }

const char* symchab_last_error(void) { return last_error.c_str(); }

void symchab_string_free(char* s) { std::free(s); }

int symchab_series_parse(const char* json, symchab_series** out) {
  SYMCHAB_REQUIRE(json, out);
  return guarded([&] { *out = new symchab_series{series_from_json(parse_json_text(json))}; });
}

void symchab_series_free(symchab_series* f) { delete f; }

int symchab_box_parse(const char* json, symchab_box** out) {
  SYMCHAB_REQUIRE(json, out);
  return guarded([&] { *out = new symchab_box{box_from_json(parse_json_text(json))}; });
}

void symchab_box_free(symchab_box* box) { delete box; }

int symchab_vrt(const symchab_series* f, const char* w_json, char** out_json) {
  SYMCHAB_REQUIRE(f, w_json, out_json);
  return guarded([&] {
    const RatVector w = rational_vector_from_json(parse_json_text(w_json), "w");
    put_envelope(out_json, {{"w", rational_vector_to_json(w)},
                            {"m_w", m_w(f->value, w).to_string()},
                            {"vrt", vertex_set_to_json(vrt_w(f->value, w))}});
  });
}

int symchab_vrt_box(const symchab_series* f, const symchab_box* box, char** out_json) {
  SYMCHAB_REQUIRE(f, box, out_json);
  return guarded([&] { put_envelope(out_json, {{"vrt_box", vertex_set_to_json(vrt_box(f->value, box->value))}}); });
}

int symchab_trop(const symchab_series* f, const symchab_box* box, char** out_json) {
  SYMCHAB_REQUIRE(f, box, out_json);
  return guarded([&] { put_envelope(out_json, {{"trop", locus_to_json(trop_pure(f->value, box->value))}}); });
}

int symchab_aux(const symchab_series* f, const symchab_box* box, char** out_json) {
  SYMCHAB_REQUIRE(f, box, out_json);
  return guarded([&] { put_envelope(out_json, {{"aux_support", exponent_list(aux_support(f->value, box->value))}}); });
}

int symchab_disk_window(int64_t k, int64_t e, int64_t p, int64_t* out) {
  SYMCHAB_REQUIRE(out);
  return guarded([&] {
    if (k < 1) throw DomainError("k must be positive");
    *out = disk_truncation_window(k, PAdicContext(p, e));
  });
}

int symchab_annulus_window(int64_t g, int64_t e, int64_t p, int has_rank, int64_t rank, int64_t* out) {
  SYMCHAB_REQUIRE(out);
  return guarded([&] {
    if (g < 2) throw DomainError("genus must satisfy g >= 2");
    if (has_rank && rank < 0) throw DomainError("rank must be nonnegative");
    *out = annulus_window(g, PAdicContext(p, e), has_rank ? std::optional<std::int64_t>(rank) : std::nullopt);
  });
}

int symchab_poly_parse(const char* json, symchab_poly** out) {
  SYMCHAB_REQUIRE(json, out);
  return guarded([&] { *out = new symchab_poly{poly_from_json(parse_json_text(json))}; });
}

int symchab_aggregate_poly(int64_t p, int hyperelliptic, symchab_poly** out) {
  SYMCHAB_REQUIRE(out);
  return guarded([&] { *out = new symchab_poly{aggregate_bound(p, hyperelliptic != 0)}; });
}

int symchab_uniform_poly(int hyperelliptic, symchab_poly** out) {
  SYMCHAB_REQUIRE(out);
  return guarded([&] { *out = new symchab_poly{uniform_bound_polynomial(hyperelliptic != 0)}; });
}

int symchab_eliminate_t(const symchab_poly* poly, symchab_poly** out) {
  SYMCHAB_REQUIRE(poly, out);
  return guarded([&] { *out = new symchab_poly{eliminate_t(poly->value)}; });
}

int symchab_poly_equal(const symchab_poly* a, const symchab_poly* b, int* out) {
  SYMCHAB_REQUIRE(a, b, out);
  *out = a->value == b->value ? 1 : 0;
  return SYMCHAB_OK;
}

int symchab_poly_to_string(const symchab_poly* poly, char** out) {
  SYMCHAB_REQUIRE(poly, out);
  return guarded([&] { *out = dup_string(poly->value.to_string()); });
}

int symchab_poly_to_json(const symchab_poly* poly, char** out) {
  SYMCHAB_REQUIRE(poly, out);
  return guarded([&] { *out = dup_string(poly_to_json(poly->value).dump()); });
}

int symchab_poly_eval(const symchab_poly* poly, const char* g, const char* t, const char* r, char** out) {
  SYMCHAB_REQUIRE(poly, g, t, r, out);
  return guarded([&] {
    *out = dup_string(format_rational(poly->value.eval(parse_rational(g), parse_rational(t), parse_rational(r))));
  });
}

void symchab_poly_free(symchab_poly* poly) { delete poly; }

int symchab_uniform_bound(int64_t g, int64_t r, int hyperelliptic, char** out_json) {
  SYMCHAB_REQUIRE(out_json);
  return guarded([&] {
    const bool hyp = hyperelliptic != 0;
    const Rational bound = uniform_bound(g, hyp, r);
    const RatPoly poly = uniform_bound_polynomial(hyp);
    Json payload = {{"g", g},
                    {"r", r},
                    {"hyperelliptic", hyp},
                    {"bound", rat(bound)},
                    {"decimal", decimal_string(bound, 6)},
                    {"polynomial", poly.to_string()}};
    std::vector<std::string> notes;
    if (hyp) {
      // The bound is affine in r.
      const Rational slope = poly.eval(g, 0, 1) - poly.eval(g, 0, 0);
      const Rational published = published_hyperelliptic_bound().eval(g, 0, r);
      payload["r_dependence"] = {{"at_r0", rat(poly.eval(g, 0, 0))}, {"per_unit_r", rat(slope)}};
      payload["published_bound"] = rat(published);
      payload["published_decimal"] = decimal_string(published, 6);
      payload["published_polynomial"] = published_hyperelliptic_bound().to_string();
      notes = discrepancy_notes(true);
    }
    put_envelope(out_json, std::move(payload), notes);
  });
}

int symchab_cases(int64_t g, int64_t t, int64_t p, int64_t r, int hyperelliptic, char** out_json) {
  SYMCHAB_REQUIRE(out_json);
  return guarded([&] {
    const bool hyp = hyperelliptic != 0;
    if (r < 0) throw DomainError("rank must be nonnegative");
    const PartitionCounts pc = partition_counts(p, g, t);
    const Rational d1 = pc.d1.eval(0, 0, 0);
    const Rational d2 = pc.d2.eval(0, 0, 0);
    const Rational alpha = pc.alpha.eval(0, 0, 0);
    const auto counts = tube_counts(pc);
    Json tubes = Json::array();
    for (auto id : kAllCases) {
      tubes.push_back({{"case", case_label(id)},
                       {"ramification", case_ramification(id)},
                       {"kind", is_annulus_case(id) ? "annulus" : (id == CaseId::c3c ? "mixed" : "disk")},
                       {"tubes", rat(counts.at(id).eval(0, 0, 0))},
                       {"zero_bound", rat(case_bound(id, p, g, t, r, hyp))}});
    }
    Json rows = Json::array();
    Rational total = 0;
    for (auto row : kAllRows) {
      const Rational v = row_bound(row, p, hyp).eval(g, t, r);
      total += v;
      rows.push_back({{"row", row_label(row)}, {"bound", rat(v)}, {"decimal", decimal_string(v, 6)}});
    }
    Json payload = {{"p", p},
                    {"g", g},
                    {"t", t},
                    {"r", r},
                    {"hyperelliptic", hyp},
                    {"partition", {{"D1", rat(d1)}, {"D2", rat(d2)}, {"alpha", rat(alpha)}}},
                    {"cases", tubes},
                    {"rows", rows},
                    {"aggregate", rat(total)},
                    {"aggregate_decimal", decimal_string(total, 6)}};
    std::vector<std::string> notes = discrepancy_notes(hyp);
    notes.erase(notes.begin() + 1);  // the mixed-case cap note belongs to the verification suite
    put_envelope(out_json, std::move(payload), notes);
  });
}

int symchab_verify(const char* suite, uint64_t seed, symchab_report** out) {
  SYMCHAB_REQUIRE(suite, out);
  const std::string name(suite);
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    return fail(SYMCHAB_ERR_UNKNOWN_NAME, ("unknown verification suite \"" + name + "\"").c_str());
  }
  return guarded([&] { *out = new symchab_report{run_suite(name, seed)}; });
}

int symchab_report_passed(const symchab_report* report, int* passed) {
  SYMCHAB_REQUIRE(report, passed);
  *passed = 1;
  for (const auto& s : report->suites) {
    if (!s.passed) *passed = 0;
  }
  return SYMCHAB_OK;
}

int symchab_report_json(const symchab_report* report, char** out_json) {
  SYMCHAB_REQUIRE(report, out_json);
  return guarded([&] {
    Json suites = Json::array();
    std::vector<std::string> notes;
    bool passed = true;
    for (const auto& s : report->suites) {
      suites.push_back(report_to_json(s));
      passed = passed && s.passed;
      for (const auto& n : s.notes) {
        if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
      }
    }
    put_envelope(out_json, {{"passed", passed}, {"suites", suites}}, notes);
  });
}

int symchab_report_text(const symchab_report* report, char** out_text) {
  SYMCHAB_REQUIRE(report, out_text);
  return guarded([&] {
    std::string text;
    for (const auto& s : report->suites) {
      text += (s.passed ? "PASS  " : "FAIL  ") + s.name + "\n";
      for (const auto& line : s.lines) text += "      " + line + "\n";
      for (const auto& note : s.notes) text += "      note: " + note + "\n";
    }
    *out_text = dup_string(text);
  });
}

void symchab_report_free(symchab_report* report) { delete report; }

int symchab_mv(const char* input_json, char** out_json) {
  SYMCHAB_REQUIRE(input_json, out_json);
  return guarded([&] {
    const Json in = parse_json_text(input_json);
    if (in.is_object() && in.contains("a")) {
      const Json& a = in["a"];
      if (!a.is_array() || a.size() != 2 || !a[0].is_array() || a[0].size() != 2 || !a[1].is_array() ||
          a[1].size() != 2) {
        throw ParseError("field \"a\": expected [[a11, a12], [a21, a22]]");
      }
      IntMatrix2 m{};
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          if (!a[i][j].is_number_integer()) {
            throw ParseError("field \"a[" + std::to_string(i) + "][" + std::to_string(j) + "]\": expected an integer");
          }
          m[i][j] = a[i][j].get<std::int64_t>();
        }
      }
      const Rational mv = mv_case_quadrilaterals(m);
      const Rational closed = quadrilateral_closed_form(m);
      std::vector<std::string> notes;
      if (mv != closed) notes.push_back(discrepancy_notes(false)[0]);
      put_envelope(out_json, {{"mv", rat(mv)}, {"closed_form", rat(closed)}, {"permanent", permanent2(m)}},
                   notes);
      return;
    }
    if (!in.is_object() || !in.contains("P1") || !in.contains("P2")) {
      throw ParseError("field \"P1\": expected {\"P1\": polytope, \"P2\": polytope} or {\"a\": matrix}");
    }
    LatticePolytope2 p1;
    LatticePolytope2 p2;
    try {
      p1 = polytope_from_json(in["P1"]);
    } catch (const ParseError& e) {
      throw ParseError(std::string("P1.") + e.what());
    }
    try {
      p2 = polytope_from_json(in["P2"]);
    } catch (const ParseError& e) {
      throw ParseError(std::string("P2.") + e.what());
    }
    put_envelope(out_json, {{"mv", rat(mixed_volume2(p1, p2))},
                            {"area1", rat(area2(p1))},
                            {"area2", rat(area2(p2))},
                            {"P1", polytope_to_json(p1)},
                            {"P2", polytope_to_json(p2)}});
  });
}

int symchab_oracle_system(const char* system_json, char** out_json) {
  SYMCHAB_REQUIRE(system_json, out_json);
  return guarded([&] {
    const FiniteFieldSystem sys = system_from_json(parse_json_text(system_json));
    const auto s1 = support_of(sys.f1, sys.q);
    const auto s2 = support_of(sys.f2, sys.q);
    put_envelope(out_json, {{"q", sys.q},
                            {"torus_solutions", torus_solutions(sys)},
                            {"finitely_many_zeros", has_finitely_many_zeros(sys)},
                            {"bernstein_bound", rat(bernstein_bound(s1, s2))}});
  });
}

int symchab_oracle_delta(const char* r, int64_t k, int64_t p, int64_t cap, char** out_json) {
  SYMCHAB_REQUIRE(r, out_json);
  return guarded([&] {
    const Rational rr = parse_rational(r);
    const PAdicContext ctx(p, 1);
    put_envelope(out_json, {{"r", rat(rr)},
                            {"k", k},
                            {"p", p},
                            {"scan", brute_delta(rr, k, ctx, cap)},
                            {"closed_form", delta(rr, k, ctx)}});
  });
}

int symchab_oracle_np(const char* r, int64_t n0, int64_t p, int64_t cap, char** out_json) {
  SYMCHAB_REQUIRE(r, out_json);
  return guarded([&] {
    const Rational rr = parse_rational(r);
    put_envelope(out_json,
                 {{"r", rat(rr)}, {"n0", n0}, {"p", p}, {"scan", brute_np(rr, n0, p, cap)}, {"closed_form", n_p(rr, n0, p)}});
  });
}

}  // extern "C"
