#include "symchab/series.hpp"

#include <algorithm>
#include <string>

#include "symchab/errors.hpp"

namespace symchab {

BoxPolyhedron::BoxPolyhedron(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw DomainError("box needs at least one interval");
  for (const auto& iv : intervals_) {
    if (iv.lo > iv.hi) {
      throw DomainError("box interval [" + format_rational(iv.lo) + ", " + format_rational(iv.hi) + "] is empty");
    }
  }
}

bool BoxPolyhedron::contains(const std::vector<Rational>& w) const {
  if (w.size() != dim()) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!intervals_[i].contains(w[i])) return false;
  }
  return true;
}

PureSeries::PureSeries(int d, std::vector<SeriesComponent> components, ExtRational constant_val)
    : d_(d), constant_val_(std::move(constant_val)) {
  if (d < 1) throw DomainError("series dimension must be positive");
  if (components.size() != static_cast<std::size_t>(d)) {
    throw DomainError("series of dimension " + std::to_string(d) + " needs exactly " + std::to_string(d) +
                      " components, got " + std::to_string(components.size()));
  }
  std::sort(components.begin(), components.end(),
            [](const SeriesComponent& a, const SeriesComponent& b) { return a.var < b.var; });
  for (int i = 0; i < d; ++i) {
    const auto& c = components[static_cast<std::size_t>(i)];
    if (c.var != i) throw DomainError("components must cover variables 0.." + std::to_string(d - 1) + " once each");
    for (const auto& [exp, val] : c.terms) {
      if (exp == 0) throw DomainError("exponent 0 belongs to the global constant, not to component " + std::to_string(i));
      if (exp < 0 && c.kind == ComponentKind::disk) {
        throw DomainError("disk component " + std::to_string(i) + " has negative exponent " + std::to_string(exp));
      }
    }
  }
  components_ = std::move(components);
}

PureSeries PureSeries::univariate(std::map<std::int64_t, Rational> terms, ExtRational constant_val,
                                  ComponentKind kind) {
  return PureSeries(1, {SeriesComponent{0, kind, std::move(terms)}}, std::move(constant_val));
}

std::size_t PureSeries::term_count() const {
  std::size_t n = 0;
  for (const auto& c : components_) n += c.terms.size();
  return n;
}

std::vector<HeightEntry> height_graph(const PureSeries& f) {
  std::vector<HeightEntry> out;
  const auto d = static_cast<std::size_t>(f.d());
  for (const auto& c : f.components()) {
    for (const auto& [exp, val] : c.terms) {
      std::vector<std::int64_t> u(d, 0);
      u[static_cast<std::size_t>(c.var)] = exp;
      out.push_back({std::move(u), ExtRational(val)});
    }
  }
  if (f.constant_val().is_finite()) out.push_back({std::vector<std::int64_t>(d, 0), f.constant_val()});
  std::sort(out.begin(), out.end());
  return out;
}

bool validate_convergence(const PureSeries& f, const BoxPolyhedron& box) {
  if (box.dim() != static_cast<std::size_t>(f.d())) {
    throw DomainError("series dimension " + std::to_string(f.d()) + " does not match box dimension " +
                      std::to_string(box.dim()));
  }
  // A finite truncation is a Laurent polynomial: val + k w is bounded below on any box.
  return true;
}

}  // namespace symchab
