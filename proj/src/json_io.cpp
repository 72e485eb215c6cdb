#include "symchab/json_io.hpp"

#include <cstdlib>
#include <string>

#include "symchab/errors.hpp"

namespace symchab {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ParseError("field \"" + field + "\": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path.empty() ? "<root>" : path, "expected an object");
  auto it = j.find(key);
  const std::string field = path.empty() ? key : path + "." + key;
  if (it == j.end()) fail(field, "missing");
  return *it;
}

std::string join(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }
std::string index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::int64_t get_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<std::int64_t>();
}

const Json& get_array(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array");
  return j;
}

Rational get_rational(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) fail(field, "expected a rational string \"num/den\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(field, e.what());
  }
}

ExtRational get_ext_rational(const Json& j, const std::string& field) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtRational::infinity();
  return ExtRational(get_rational(j, field));
}

Json rat(const Rational& q) { return format_rational(q); }

}  // namespace

PureSeries series_from_json(const Json& j) {
  const auto d = get_int(member(j, "d", ""), "d");
  if (d < 1 || d > 64) fail("d", "dimension must be between 1 and 64");
  ExtRational constant = ExtRational::infinity();
  if (j.contains("constant_val")) constant = get_ext_rational(j["constant_val"], "constant_val");
  const Json& comps = get_array(member(j, "components", ""), "components");
  std::vector<SeriesComponent> components;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string path = index("components", i);
    SeriesComponent c;
    c.var = static_cast<int>(get_int(member(comps[i], "var", path), join(path, "var")));
    const Json& kind = member(comps[i], "kind", path);
    if (kind == "disk") {
      c.kind = ComponentKind::disk;
    } else if (kind == "annulus") {
      c.kind = ComponentKind::annulus;
    } else {
      fail(join(path, "kind"), "expected \"disk\" or \"annulus\"");
    }
    const std::string tpath = join(path, "terms");
    const Json& terms = get_array(member(comps[i], "terms", path), tpath);
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const std::string epath = index(tpath, k);
      const auto exp = get_int(member(terms[k], "exp", epath), join(epath, "exp"));
      Rational val = get_rational(member(terms[k], "val", epath), join(epath, "val"));
      if (!c.terms.emplace(exp, std::move(val)).second) fail(join(epath, "exp"), "duplicate exponent");
    }
    components.push_back(std::move(c));
  }
  try {
    return PureSeries(static_cast<int>(d), std::move(components), constant);
  } catch (const DomainError& e) {
    fail("components", e.what());
  }
}

Json series_to_json(const PureSeries& f) {
  Json comps = Json::array();
  for (const auto& c : f.components()) {
    Json terms = Json::array();
    for (const auto& [exp, val] : c.terms) terms.push_back({{"exp", exp}, {"val", rat(val)}});
    comps.push_back({{"var", c.var}, {"kind", c.kind == ComponentKind::disk ? "disk" : "annulus"}, {"terms", terms}});
  }
  return {{"d", f.d()}, {"constant_val", f.constant_val().to_string()}, {"components", comps}};
}

BoxPolyhedron box_from_json(const Json& j) {
  const Json& ivs = get_array(member(j, "intervals", ""), "intervals");
  std::vector<Interval> out;
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    const std::string path = index("intervals", i);
    if (!ivs[i].is_array() || ivs[i].size() != 2) fail(path, "expected [lo, hi]");
    out.push_back({get_rational(ivs[i][0], index(path, 0)), get_rational(ivs[i][1], index(path, 1))});
  }
  try {
    return BoxPolyhedron(std::move(out));
  } catch (const DomainError& e) {
    fail("intervals", e.what());
  }
}

Json box_to_json(const BoxPolyhedron& box) {
  Json ivs = Json::array();
  for (const auto& iv : box.intervals()) ivs.push_back({rat(iv.lo), rat(iv.hi)});
  return {{"intervals", ivs}};
}

Json rational_vector_to_json(const RatVector& w) {
  Json out = Json::array();
  for (const auto& x : w) out.push_back(rat(x));
  return out;
}

RatVector rational_vector_from_json(const Json& j, const std::string& field) {
  const Json& arr = get_array(j, field);
  RatVector out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(get_rational(arr[i], index(field, i)));
  return out;
}

Json vertex_set_to_json(const VertexSet& entries) {
  Json out = Json::array();
  for (const auto& e : entries) out.push_back({{"u", e.u}, {"val", e.val.to_string()}});
  return out;
}

Json locus_to_json(const TropLocus& locus) {
  Json points = Json::array();
  for (const auto& p : locus.points) points.push_back(rational_vector_to_json(p));
  Json segments = Json::array();
  for (const auto& [a, b] : locus.segments) {
    segments.push_back(Json::array({rational_vector_to_json(a), rational_vector_to_json(b)}));
  }
  return {{"points", points}, {"segments", segments}};
}

LatticePolytope2 polytope_from_json(const Json& j) {
  const Json& vs = get_array(member(j, "vertices", ""), "vertices");
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string path = index("vertices", i);
    if (!vs[i].is_array() || vs[i].size() != 2) fail(path, "expected [x, y]");
    pts.push_back({get_int(vs[i][0], index(path, 0)), get_int(vs[i][1], index(path, 1))});
  }
  return hull(pts);
}

Json polytope_to_json(const LatticePolytope2& p) {
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back({v.x, v.y});
  return {{"vertices", vs}};
}

RatPoly poly_from_json(const Json& j) {
  const Json& terms = get_array(member(j, "terms", ""), "terms");
  RatPoly out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string path = index("terms", i);
    auto deg = [&](const char* key) {
      const auto v = get_int(member(terms[i], key, path), join(path, key));
      if (v < 0 || v > 64) fail(join(path, key), "degree must be between 0 and 64");
      return static_cast<int>(v);
    };
    const int g = deg("g");
    const int t = deg("t");
    const int r = deg("r");
    out += RatPoly::monomial(get_rational(member(terms[i], "c", path), join(path, "c")), g, t, r);
  }
  return out;
}

Json poly_to_json(const RatPoly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"g", it->first.g}, {"t", it->first.t}, {"r", it->first.r}, {"c", rat(it->second)}});
  }
  return {{"terms", terms}};
}

FiniteFieldSystem system_from_json(const Json& j) {
  FiniteFieldSystem sys;
  sys.q = get_int(member(j, "q", ""), "q");
  if (!is_prime(sys.q) || sys.q > 2000) fail("q", "expected a prime modulus <= 2000");
  for (const char* key : {"f1", "f2"}) {
    const Json& terms = get_array(member(j, key, ""), key);
    auto& dst = std::string(key) == "f1" ? sys.f1 : sys.f2;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string path = index(key, i);
      const auto ex = get_int(member(terms[i], "ex", path), join(path, "ex"));
      const auto ey = get_int(member(terms[i], "ey", path), join(path, "ey"));
      if (std::llabs(ex) > 30) fail(join(path, "ex"), "exponent must satisfy |exp| <= 30");
      if (std::llabs(ey) > 30) fail(join(path, "ey"), "exponent must satisfy |exp| <= 30");
      dst.push_back({ex, ey, get_int(member(terms[i], "c", path), join(path, "c"))});
    }
  }
  return sys;
}

Json system_to_json(const FiniteFieldSystem& sys) {
  auto terms = [](const std::vector<FfTerm>& f) {
    Json out = Json::array();
    for (const auto& t : f) out.push_back({{"ex", t.ex}, {"ey", t.ey}, {"c", t.c}});
    return out;
  };
  return {{"q", sys.q}, {"f1", terms(sys.f1)}, {"f2", terms(sys.f2)}};
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace symchab
