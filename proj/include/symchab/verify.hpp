#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "symchab/json_io.hpp"

namespace symchab {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct SuiteReport {
  std::string name;
  bool passed = false;
  std::vector<std::string> lines;  // human-readable findings
  std::vector<std::string> notes;  // discrepancies against the published formulas
  Json details = Json::object();   // machine-readable findings (coeff_diff, counterexamples, counts)
  double seconds = 0;
};

/// Suites: theorem14, theorem15, corollary16, mv-closed-forms, annulus-cap, bernstein,
/// tropical, padic, dominance, mixed-cap, budget. "all" runs every one of them.
std::vector<std::string> suite_names();

/// Throws DomainError for an unknown name.
std::vector<SuiteReport> run_suite(std::string_view name, std::uint64_t seed = kDefaultSeed);

Json report_to_json(const SuiteReport& report);

/// {"monomial": "c"} for every coefficient where p and q differ (p - q).
Json coeff_diff_json(const RatPoly& p, const RatPoly& q);

}  // namespace symchab
