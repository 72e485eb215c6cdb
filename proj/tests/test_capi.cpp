#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>

#include "symchab/symchab.h"

namespace {

using Json = nlohmann::json;

std::string take(char* s) {
  std::string out(s);
  symchab_string_free(s);
  return out;
}

const char* kSeries = R"({"d":1,"constant_val":"inf","components":[{"var":0,"kind":"disk","terms":[
  {"exp":1,"val":"1/1"},{"exp":2,"val":"0/1"}]}]})";

}  // namespace

TEST_CASE("version and null pointers") {
  CHECK(std::string(symchab_version()) == "0.1.0");
  CHECK(symchab_series_parse(nullptr, nullptr) == SYMCHAB_ERR_NULL_PTR);
  CHECK(std::string(symchab_last_error()).find("null") != std::string::npos);
  symchab_series_free(nullptr);
  symchab_box_free(nullptr);
  symchab_poly_free(nullptr);
  symchab_report_free(nullptr);
}

TEST_CASE("tropical queries") {
  symchab_series* f = nullptr;
  symchab_box* box = nullptr;
  REQUIRE(symchab_series_parse(kSeries, &f) == SYMCHAB_OK);
  REQUIRE(symchab_box_parse(R"({"intervals":[["1/2","2"]]})", &box) == SYMCHAB_OK);
  char* out = nullptr;

  REQUIRE(symchab_vrt(f, R"(["1"])", &out) == SYMCHAB_OK);
  const Json vrt = Json::parse(take(out));
  CHECK(vrt["payload"]["vrt"].size() == 2);
  CHECK(vrt["payload"]["m_w"] == "2/1");
  CHECK(vrt["notes"].empty());

  REQUIRE(symchab_aux(f, box, &out) == SYMCHAB_OK);
  CHECK(Json::parse(take(out))["payload"]["aux_support"] == Json::parse("[[1],[2]]"));

  REQUIRE(symchab_trop(f, box, &out) == SYMCHAB_OK);
  CHECK(Json::parse(take(out))["payload"]["trop"]["points"] == Json::parse(R"([["1/1"]])"));

  REQUIRE(symchab_vrt_box(f, box, &out) == SYMCHAB_OK);
  CHECK(Json::parse(take(out))["payload"]["vrt_box"].size() == 2);

  CHECK(symchab_vrt(f, R"(["1","2"])", &out) == SYMCHAB_ERR_DOMAIN);
  symchab_series_free(f);
  symchab_box_free(box);
}

TEST_CASE("parse errors") {
  symchab_series* f = nullptr;
  CHECK(symchab_series_parse(R"({"d":1,"components":[{"var":0,"kind":"disk","terms":[{"exp":1}]}]})", &f) ==
        SYMCHAB_ERR_PARSE);
  CHECK(std::string(symchab_last_error()).find("components[0].terms[0].val") != std::string::npos);
  CHECK(symchab_series_parse("not json", &f) == SYMCHAB_ERR_PARSE);
}

TEST_CASE("windows") {
  std::int64_t w = 0;
  REQUIRE(symchab_annulus_window(4, 1, 5, 0, 0, &w) == SYMCHAB_OK);
  CHECK(w == 16);
  REQUIRE(symchab_annulus_window(4, 1, 5, 1, 0, &w) == SYMCHAB_OK);
  CHECK(w == 8);
  REQUIRE(symchab_disk_window(4, 1, 5, &w) == SYMCHAB_OK);
  CHECK(w == 5);
  CHECK(symchab_disk_window(4, 4, 5, &w) == SYMCHAB_ERR_UNSUPPORTED);
}

TEST_CASE("polynomials") {
  symchab_poly* agg = nullptr;
  symchab_poly* bound = nullptr;
  REQUIRE(symchab_aggregate_poly(5, 0, &agg) == SYMCHAB_OK);
  REQUIRE(symchab_eliminate_t(agg, &bound) == SYMCHAB_OK);
  char* out = nullptr;
  REQUIRE(symchab_poly_to_string(bound, &out) == SYMCHAB_OK);
  CHECK(take(out) == "288g^4 + 1616/3g^3 - 2900/9g^2 + 11654/9g - 4012/9");
  REQUIRE(symchab_poly_eval(bound, "4", "0", "0", &out) == SYMCHAB_OK);
  CHECK(take(out) == "970028/9");
  REQUIRE(symchab_poly_to_json(agg, &out) == SYMCHAB_OK);
  symchab_poly* back = nullptr;
  REQUIRE(symchab_poly_parse(take(out).c_str(), &back) == SYMCHAB_OK);
  int same = 0;
  REQUIRE(symchab_poly_equal(agg, back, &same) == SYMCHAB_OK);
  CHECK(same == 1);
  symchab_poly* uni = nullptr;
  REQUIRE(symchab_uniform_poly(0, &uni) == SYMCHAB_OK);
  REQUIRE(symchab_poly_equal(uni, bound, &same) == SYMCHAB_OK);
  CHECK(same == 1);
  CHECK(symchab_poly_eval(bound, "x", "0", "0", &out) == SYMCHAB_ERR_PARSE);
  symchab_poly_free(agg);
  symchab_poly_free(bound);
  symchab_poly_free(back);
  symchab_poly_free(uni);
}

TEST_CASE("bounds") {
  char* out = nullptr;
  REQUIRE(symchab_uniform_bound(4, 0, 0, &out) == SYMCHAB_OK);
  const Json plain = Json::parse(take(out));
  CHECK(plain["payload"]["bound"] == "970028/9");
  CHECK(plain["notes"].empty());

  REQUIRE(symchab_uniform_bound(4, 0, 1, &out) == SYMCHAB_OK);
  const Json hyp = Json::parse(take(out));
  CHECK(hyp["payload"]["published_bound"] == "392557/9");
  CHECK(hyp["payload"]["bound"] == "423956/9");
  CHECK_FALSE(hyp["notes"].empty());

  CHECK(symchab_uniform_bound(4, 1, 0, &out) == SYMCHAB_ERR_RANK_CONDITION);
  CHECK(std::string(symchab_last_error()).find("r ≤ g−4") != std::string::npos);

  REQUIRE(symchab_cases(4, 1, 5, 0, 0, &out) == SYMCHAB_OK);
  const Json cases = Json::parse(take(out));
  CHECK(cases["payload"]["aggregate"] == "502148/9");
  CHECK(cases["payload"]["cases"][4]["case"] == "3a");
  CHECK(cases["payload"]["cases"][4]["tubes"] == "3240/1");
  CHECK(symchab_cases(4, 5, 5, 0, 0, &out) == SYMCHAB_ERR_DOMAIN);
}

TEST_CASE("verification and mixed volumes") {
  symchab_report* report = nullptr;
  REQUIRE(symchab_verify("theorem14", 1, &report) == SYMCHAB_OK);
  int passed = 0;
  REQUIRE(symchab_report_passed(report, &passed) == SYMCHAB_OK);
  CHECK(passed == 1);
  char* out = nullptr;
  REQUIRE(symchab_report_json(report, &out) == SYMCHAB_OK);
  CHECK(Json::parse(take(out))["payload"]["suites"][0]["suite"] == "theorem14");
  REQUIRE(symchab_report_text(report, &out) == SYMCHAB_OK);
  CHECK(take(out).rfind("PASS  theorem14", 0) == 0);
  symchab_report_free(report);
  CHECK(symchab_verify("nope", 1, &report) == SYMCHAB_ERR_UNKNOWN_NAME);

  REQUIRE(symchab_mv(R"({"a":[[2,2],[2,2]]})", &out) == SYMCHAB_OK);
  const Json quad = Json::parse(take(out));
  CHECK(quad["payload"]["mv"] == "3/1");
  CHECK(quad["notes"].empty());
  REQUIRE(symchab_mv(R"({"a":[[1,1],[1,2]]})", &out) == SYMCHAB_OK);
  CHECK_FALSE(Json::parse(take(out))["notes"].empty());
  REQUIRE(symchab_mv(R"({"P1":{"vertices":[[0,0],[3,0]]},"P2":{"vertices":[[0,0],[0,2]]}})", &out) == SYMCHAB_OK);
  CHECK(Json::parse(take(out))["payload"]["mv"] == "6/1");
  CHECK(symchab_mv(R"({"P1":{"vertices":[[0]]},"P2":{"vertices":[]}})", &out) == SYMCHAB_ERR_PARSE);
  CHECK(std::string(symchab_last_error()).find("P1.") != std::string::npos);
}

TEST_CASE("oracles") {
  char* out = nullptr;
  REQUIRE(symchab_oracle_system(R"({"q":101,"f1":[{"ex":1,"ey":0,"c":1},{"ex":0,"ey":1,"c":1},{"ex":0,"ey":0,"c":-2}],
    "f2":[{"ex":1,"ey":0,"c":1},{"ex":0,"ey":1,"c":-1}]})",
                                &out) == SYMCHAB_OK);
  const Json sys = Json::parse(take(out));
  CHECK(sys["payload"]["torus_solutions"] == 1);
  CHECK(sys["payload"]["finitely_many_zeros"] == true);
  CHECK(sys["payload"]["bernstein_bound"] == "1/1");
  REQUIRE(symchab_oracle_delta("1", 3, 5, 50, &out) == SYMCHAB_OK);
  CHECK(Json::parse(take(out))["payload"]["scan"] == 1);
  REQUIRE(symchab_oracle_np("1/2", 2, 5, 200, &out) == SYMCHAB_OK);
  CHECK(Json::parse(take(out))["payload"]["scan"] == 3);
  CHECK(symchab_oracle_np("1", 60, 5, 100, &out) == SYMCHAB_ERR_INCONCLUSIVE);
}
