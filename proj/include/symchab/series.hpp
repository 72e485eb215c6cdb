#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "symchab/rational.hpp"

namespace symchab {

struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed box prod [lo_i, hi_i] of valuation profiles.
class BoxPolyhedron {
 public:
  explicit BoxPolyhedron(std::vector<Interval> intervals);

  std::size_t dim() const { return intervals_.size(); }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  bool contains(const std::vector<Rational>& w) const;

 private:
  std::vector<Interval> intervals_;
};

enum class ComponentKind { disk, annulus };

/// One univariate summand f_i(t_i), stored as exponent -> coefficient valuation.
struct SeriesComponent {
  int var = 0;
  ComponentKind kind = ComponentKind::disk;
  std::map<std::int64_t, Rational> terms;
};

/// C + f_1(t_1) + ... + f_d(t_d), recorded through coefficient valuations only.
///
/// Exponent 0 is reserved for the global constant; disk components carry positive
/// exponents only, annulus components any nonzero exponent.
class PureSeries {
 public:
  PureSeries(int d, std::vector<SeriesComponent> components,
             ExtRational constant_val = ExtRational::infinity());

  /// Convenience: d = 1, a single disk component.
  static PureSeries univariate(std::map<std::int64_t, Rational> terms,
                               ExtRational constant_val = ExtRational::infinity(),
                               ComponentKind kind = ComponentKind::disk);

  int d() const { return d_; }
  const std::vector<SeriesComponent>& components() const { return components_; }
  const SeriesComponent& component(int var) const { return components_.at(static_cast<std::size_t>(var)); }
  const ExtRational& constant_val() const { return constant_val_; }
  std::size_t term_count() const;

 private:
  int d_;
  std::vector<SeriesComponent> components_;  // indexed by var
  ExtRational constant_val_;
};

/// (u, v(a_u)) with u in Z^d.
struct HeightEntry {
  std::vector<std::int64_t> u;
  ExtRational val;

  friend bool operator==(const HeightEntry&, const HeightEntry&) = default;
  friend auto operator<=>(const HeightEntry& a, const HeightEntry& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.val <=> b.val;
  }
};

/// One entry per stored term plus the constant when finite, sorted.
std::vector<HeightEntry> height_graph(const PureSeries& f);

/// Sanity gate for finite truncations: dimensions agree and every stored value is
/// finite. Throws DomainError on dimension mismatch.
bool validate_convergence(const PureSeries& f, const BoxPolyhedron& box);

}  // namespace symchab
