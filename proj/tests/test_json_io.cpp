#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "symchab/bounds.hpp"
#include "symchab/errors.hpp"
#include "symchab/json_io.hpp"

using namespace symchab;

namespace {

std::string parse_error_of(const std::string& text, PureSeries (*fn)(const Json&)) {
  try {
    fn(parse_json_text(text));
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("series round trip") {
  const std::string text = R"({"d":2,"constant_val":"1/2","components":[
    {"var":1,"kind":"annulus","terms":[{"exp":-2,"val":"3/1"},{"exp":1,"val":"-1/3"}]},
    {"var":0,"kind":"disk","terms":[{"exp":4,"val":"0/1"},{"exp":1,"val":"6/4"}]}]})";
  const PureSeries f = series_from_json(parse_json_text(text));
  CHECK(f.d() == 2);
  CHECK(f.constant_val() == ExtRational(Rational(1, 2)));
  CHECK(f.component(0).terms.at(1) == Rational(3, 2));
  CHECK(f.component(1).kind == ComponentKind::annulus);
  const Json out = series_to_json(f);
  CHECK(out["components"][0]["terms"][0]["val"] == "3/2");
  CHECK(height_graph(series_from_json(out)) == height_graph(f));
  CHECK(series_to_json(series_from_json(out)) == out);
}

TEST_CASE("series parse errors name the field") {
  CHECK(parse_error_of(R"({"components":[]})", series_from_json).find("\"d\"") != std::string::npos);
  CHECK(parse_error_of(R"({"d":1,"components":[{"var":0,"kind":"disk","terms":[{"exp":1,"val":"x"}]}]})",
                       series_from_json)
            .find("components[0].terms[0].val") != std::string::npos);
  CHECK(parse_error_of(R"({"d":1,"components":[{"var":0,"kind":"disc","terms":[]}]})", series_from_json)
            .find("components[0].kind") != std::string::npos);
  CHECK(parse_error_of(R"({"d":1,"components":[{"var":0,"kind":"disk","terms":[{"exp":-1,"val":"1"}]}]})",
                       series_from_json)
            .find("components") != std::string::npos);
  CHECK_THROWS_AS(parse_json_text("{"), ParseError);
}

TEST_CASE("box round trip and errors") {
  const BoxPolyhedron box = box_from_json(parse_json_text(R"({"intervals":[["1/2","2"],["-1","3/3"]]})"));
  CHECK(box[1].hi == 1);
  CHECK(box_to_json(box)["intervals"][0][0] == "1/2");
  CHECK_THROWS_WITH_AS(box_from_json(parse_json_text(R"({"intervals":[["1"]]})")),
                       doctest::Contains("intervals[0]"), ParseError);
  CHECK_THROWS_AS(box_from_json(parse_json_text(R"({"intervals":[["2","1"]]})")), ParseError);
}

TEST_CASE("polynomial round trip") {
  const RatPoly p = published_aggregate();
  CHECK(poly_from_json(poly_to_json(p)) == p);
  CHECK_THROWS_WITH_AS(poly_from_json(parse_json_text(R"({"terms":[{"g":1,"t":0,"c":"1"}]})")),
                       doctest::Contains("terms[0].r"), ParseError);
}

TEST_CASE("polytope and system JSON") {
  const auto p = polytope_from_json(parse_json_text(R"({"vertices":[[0,0],[2,0],[1,0],[0,3]]})"));
  CHECK(p.vertices().size() == 3);
  CHECK(polytope_to_json(p)["vertices"][2] == Json::array({0, 3}));
  const auto sys = system_from_json(parse_json_text(R"({"q":7,"f1":[{"ex":1,"ey":0,"c":1}],"f2":[]})"));
  CHECK(sys.q == 7);
  CHECK(system_to_json(sys)["f1"][0]["c"] == 1);
  CHECK_THROWS_WITH_AS(system_from_json(parse_json_text(R"({"q":8,"f1":[],"f2":[]})")), doctest::Contains("\"q\""),
                       ParseError);
  CHECK_THROWS_WITH_AS(system_from_json(parse_json_text(R"({"q":7,"f1":[{"ex":40,"ey":0,"c":1}],"f2":[]})")),
                       doctest::Contains("f1[0].ex"), ParseError);
}

TEST_CASE("locus JSON") {
  TropLocus locus;
  locus.points.push_back({Rational(1, 2)});
  locus.segments.push_back({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
  const Json j = locus_to_json(locus);
  CHECK(j["points"][0][0] == "1/2");
  CHECK(j["segments"][0][1][0] == "1/1");
}
