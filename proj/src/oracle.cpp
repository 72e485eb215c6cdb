#include "symchab/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "symchab/errors.hpp"

namespace symchab {

namespace {

// Dense univariate polynomial over F_q, low degree first, no trailing zeros.
using UPoly = std::vector<std::int64_t>;

std::int64_t mod(std::int64_t a, std::int64_t q) {
  a %= q;
  return a < 0 ? a + q : a;
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t q) {
  std::int64_t out = 1;
  b = mod(b, q);
  while (e > 0) {
    if (e & 1) out = out * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return out;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t q) { return pow_mod(a, q - 2, q); }

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly sub(const UPoly& a, const UPoly& b, std::int64_t q) {
  UPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = mod(out[i] - b[i], q);
  trim(out);
  return out;
}

UPoly mul(const UPoly& a, const UPoly& b, std::int64_t q) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % q;
  }
  trim(out);
  return out;
}

// a / b where b divides a.
UPoly div_exact(UPoly a, const UPoly& b, std::int64_t q) {
  if (b.empty()) throw Error("division by the zero polynomial");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw Error("inexact polynomial division");
  const std::int64_t lead_inv = inv_mod(b.back(), q);
  UPoly quot(a.size() - b.size() + 1, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const std::int64_t c = a[i + b.size() - 1] * lead_inv % q;
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] = mod(a[i + j] - c * b[j], q);
  }
  trim(a);
  if (!a.empty()) throw Error("inexact polynomial division");
  trim(quot);
  return quot;
}

// Polynomial in the main variable with coefficients in F_q[other], low degree first.
using BiPoly = std::vector<UPoly>;

struct Cleared {
  std::vector<std::array<std::int64_t, 2>> exps;
  std::vector<std::int64_t> coeffs;
};

Cleared clear(const std::vector<FfTerm>& f, std::int64_t q) {
  std::map<std::array<std::int64_t, 2>, std::int64_t> acc;
  for (const auto& t : f) {
    auto& c = acc[{t.ex, t.ey}];
    c = mod(c + t.c, q);
  }
  Cleared out;
  std::int64_t mx = 0;
  std::int64_t my = 0;
  bool first = true;
  for (const auto& [e, c] : acc) {
    if (c == 0) continue;
    mx = first ? e[0] : std::min(mx, e[0]);
    my = first ? e[1] : std::min(my, e[1]);
    first = false;
  }
  for (const auto& [e, c] : acc) {
    if (c == 0) continue;
    out.exps.push_back({e[0] - mx, e[1] - my});
    out.coeffs.push_back(c);
  }
  return out;
}

// Views the cleared polynomial as a polynomial in variable `main` (0 = x, 1 = y).
BiPoly as_bipoly(const Cleared& f, int main) {
  BiPoly out;
  for (std::size_t i = 0; i < f.exps.size(); ++i) {
    const auto dm = static_cast<std::size_t>(f.exps[i][static_cast<std::size_t>(main)]);
    const auto dothr = static_cast<std::size_t>(f.exps[i][static_cast<std::size_t>(1 - main)]);
    if (out.size() <= dm) out.resize(dm + 1);
    if (out[dm].size() <= dothr) out[dm].resize(dothr + 1, 0);
    out[dm][dothr] = f.coeffs[i];
  }
  for (auto& c : out) trim(c);
  return out;
}

// Whether Res_main(f, g) is a nonzero element of F_q[other]. Both inputs are nonzero.
bool resultant_nonzero(const BiPoly& f, const BiPoly& g, std::int64_t q) {
  const std::size_t m = f.size() - 1;
  const std::size_t n = g.size() - 1;
  if (m == 0 || n == 0) return true;  // a power of a nonzero coefficient
  const std::size_t size = m + n;
  std::vector<std::vector<UPoly>> s(size, std::vector<UPoly>(size));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
  }
  // Fraction-free elimination; every division is exact.
  UPoly prev{1};
  for (std::size_t k = 0; k < size; ++k) {
    if (s[k][k].empty()) {
      std::size_t pivot = k + 1;
      while (pivot < size && s[pivot][k].empty()) ++pivot;
      if (pivot == size) return false;
      std::swap(s[k], s[pivot]);
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        s[i][j] = div_exact(sub(mul(s[i][j], s[k][k], q), mul(s[i][k], s[k][j], q), q), prev, q);
      }
      s[i][k].clear();
    }
    prev = s[k][k];
  }
  return !s[size - 1][size - 1].empty();
}

std::int64_t eval_cleared(const Cleared& f, const std::vector<std::int64_t>& xpow,
                          const std::vector<std::int64_t>& ypow, std::int64_t q) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < f.exps.size(); ++i) {
    acc = (acc + f.coeffs[i] * xpow[static_cast<std::size_t>(f.exps[i][0])] % q *
                     ypow[static_cast<std::size_t>(f.exps[i][1])]) %
          q;
  }
  return acc;
}

std::int64_t max_exp(const Cleared& f, int axis) {
  std::int64_t out = 0;
  for (const auto& e : f.exps) out = std::max(out, e[static_cast<std::size_t>(axis)]);
  return out;
}

std::vector<std::int64_t> powers(std::int64_t b, std::int64_t n, std::int64_t q) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(n + 1), 1);
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = out[i - 1] * b % q;
  return out;
}

}  // namespace

void validate_system(const FiniteFieldSystem& sys) {
  if (!is_prime(sys.q)) throw DomainError("q must be prime, got " + std::to_string(sys.q));
  if (sys.q > 2000) throw DomainError("q must be at most 2000 for the exhaustive scan");
  for (const auto* f : {&sys.f1, &sys.f2}) {
    for (const auto& t : *f) {
      if (std::llabs(t.ex) > 30 || std::llabs(t.ey) > 30) throw DomainError("exponents must satisfy |exp| <= 30");
    }
  }
}

std::int64_t torus_solutions(const FiniteFieldSystem& sys) {
  validate_system(sys);
  const std::int64_t q = sys.q;
  const Cleared f1 = clear(sys.f1, q);
  const Cleared f2 = clear(sys.f2, q);
  const std::int64_t dx = std::max(max_exp(f1, 0), max_exp(f2, 0));
  const std::int64_t dy = std::max(max_exp(f1, 1), max_exp(f2, 1));
  std::int64_t count = 0;
  for (std::int64_t x = 1; x < q; ++x) {
    const auto xp = powers(x, dx, q);
    for (std::int64_t y = 1; y < q; ++y) {
      const auto yp = powers(y, dy, q);
      if (eval_cleared(f1, xp, yp, q) == 0 && eval_cleared(f2, xp, yp, q) == 0) ++count;
    }
  }
  return count;
}

bool has_finitely_many_zeros(const FiniteFieldSystem& sys) {
  validate_system(sys);
  const Cleared f1 = clear(sys.f1, sys.q);
  const Cleared f2 = clear(sys.f2, sys.q);
  if (f1.exps.empty() && f2.exps.empty()) throw DomainError("both polynomials are identically zero");
  if (f1.exps.empty() || f2.exps.empty()) {
    // The zero set is that of the other polynomial: empty on the torus for a monomial, a curve otherwise.
    const Cleared& other = f1.exps.empty() ? f2 : f1;
    return other.exps.size() == 1;
  }
  return resultant_nonzero(as_bipoly(f1, 1), as_bipoly(f2, 1), sys.q) &&
         resultant_nonzero(as_bipoly(f1, 0), as_bipoly(f2, 0), sys.q);
}

std::vector<Point2> support_of(const std::vector<FfTerm>& f, std::int64_t q) {
  std::map<std::array<std::int64_t, 2>, std::int64_t> acc;
  for (const auto& t : f) {
    auto& c = acc[{t.ex, t.ey}];
    c = mod(c + t.c, q);
  }
  std::vector<Point2> out;
  for (const auto& [e, c] : acc) {
    if (c != 0) out.push_back({e[0], e[1]});
  }
  return out;
}

VertexSet direct_vrt(const PureSeries& f, const RatVector& w) {
  if (w.size() != static_cast<std::size_t>(f.d())) throw DomainError("grid point has the wrong dimension");
  const auto graph = height_graph(f);
  std::vector<Rational> levels;
  levels.reserve(graph.size());
  for (const auto& e : graph) {
    Rational level = e.val.value();
    for (std::size_t i = 0; i < w.size(); ++i) level += e.u[i] * w[i];
    levels.push_back(std::move(level));
  }
  VertexSet out;
  if (graph.empty()) return out;
  const Rational best = *std::min_element(levels.begin(), levels.end());
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (levels[i] == best) out.push_back(graph[i]);
  }
  return out;
}

std::map<RatVector, VertexSet> grid_vrt(const PureSeries& f, const BoxPolyhedron& box, std::int64_t refinement) {
  if (f.d() > 2) throw UnsupportedError("grid_vrt handles d <= 2");
  if (box.dim() != static_cast<std::size_t>(f.d())) throw DomainError("box dimension does not match the series");
  if (refinement < 1) throw DomainError("refinement must be positive");

  const std::size_t d = box.dim();
  std::vector<std::vector<Rational>> axes(d);
  for (std::size_t a = 0; a < d; ++a) {
    const Interval& iv = box[a];
    std::set<Rational> coords{iv.lo, iv.hi};
    const auto& terms = f.component(static_cast<int>(a)).terms;
    for (auto i = terms.begin(); i != terms.end(); ++i) {
      for (auto j = std::next(i); j != terms.end(); ++j) {
        const Rational w = (j->second - i->second) / Rational(i->first - j->first);
        if (iv.contains(w)) coords.insert(w);
      }
      if (f.constant_val().is_finite()) {
        const Rational w = (f.constant_val().value() - i->second) / Rational(i->first);
        if (iv.contains(w)) coords.insert(w);
      }
    }
    std::vector<Rational> base(coords.begin(), coords.end());
    std::vector<Rational> refined;
    for (std::size_t i = 0; i < base.size(); ++i) {
      refined.push_back(base[i]);
      if (i + 1 == base.size()) break;
      for (std::int64_t s = 1; s < refinement; ++s) {
        refined.push_back(base[i] + (base[i + 1] - base[i]) * Rational(s, refinement));
      }
    }
    axes[a] = std::move(refined);
  }

  std::map<RatVector, VertexSet> out;
  if (d == 1) {
    for (const auto& w : axes[0]) {
      RatVector pt{w};
      out.emplace(pt, direct_vrt(f, pt));
    }
    return out;
  }

  for (const auto& w0 : axes[0]) {
    for (const auto& w1 : axes[1]) {
      RatVector pt{w0, w1};
      out.emplace(pt, direct_vrt(f, pt));
    }
  }
  // Points where one component's lower envelope meets a term of the other component.
  for (std::size_t a = 0; a < 2; ++a) {
    const std::size_t b = 1 - a;
    const auto& own = f.component(static_cast<int>(a)).terms;
    const auto& other = f.component(static_cast<int>(b)).terms;
    if (own.empty()) continue;
    for (const auto& wa : axes[a]) {
      ExtRational level;
      for (const auto& [exp, val] : own) level = std::min(level, ExtRational(val + exp * wa));
      for (const auto& [exp, val] : other) {
        const Rational wb = (level.value() - val) / Rational(exp);
        if (!box[b].contains(wb)) continue;
        RatVector pt(2);
        pt[a] = wa;
        pt[b] = wb;
        if (!out.contains(pt)) {
          auto vrt = direct_vrt(f, pt);
          out.emplace(std::move(pt), std::move(vrt));
        }
      }
    }
  }
  return out;
}

std::int64_t brute_delta(const Rational& r, std::int64_t k, const PAdicContext& ctx, std::int64_t cap) {
  if (r <= 0) throw DomainError("r must be positive");
  if (k < 0) throw DomainError("k must be nonnegative");
  if (cap < 1) throw DomainError("cap must be positive");
  const std::int64_t p = ctx.p();
  const Rational base = r * vp(k + 1, p);
  std::int64_t best = 0;
  for (std::int64_t n = 0; n < cap; ++n) {
    if (base + n <= r * vp(k + n + 1, p)) best = n;
  }
  // Any qualifying N has p^(N/r) <= k + N + 1. Past the cap p^(N den) outgrows
  // (k + N + 1)^num once it is ahead and the growth ratio exceeds 1.
  const Integer num = numerator(r);
  const auto den = static_cast<unsigned>(denominator(r));
  const auto e = static_cast<unsigned>(num);
  const Integer m(k + cap + 1);
  const Integer lhs = boost::multiprecision::pow(Integer(p), static_cast<unsigned>(cap) * den);
  const bool ahead = lhs > boost::multiprecision::pow(m, e);
  const bool growing =
      boost::multiprecision::pow(Integer(p), den) * boost::multiprecision::pow(m, e) > boost::multiprecision::pow(m + 1, e);
  if (!ahead || !growing) {
    throw InconclusiveError("brute_delta: cap " + std::to_string(cap) + " too small to certify the tail");
  }
  return best;
}

std::int64_t brute_np(const Rational& r, std::int64_t n0, std::int64_t p, std::int64_t cap) {
  if (r <= 0) throw DomainError("r must be positive");
  if (cap < 2) throw DomainError("cap must be at least 2");
  std::int64_t last_fail = 0;
  for (std::int64_t n = 1; n <= cap; ++n) {
    if (!(r * (n - n0) > floor_log(n, p))) last_fail = n;
  }
  if (last_fail > cap / 2) {
    throw InconclusiveError("brute_np: failure at n = " + std::to_string(last_fail) + " in the upper half of the scan");
  }
  return last_fail + 1;
}

}  // namespace symchab
