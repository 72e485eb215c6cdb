// Command-line driver over the C interface.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "symchab/symchab.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20240611;

enum Exit { kOk = 0, kVerifyFailed = 1, kError = 2 };

struct CliError {
  std::string message;
};

void check(int status) {
  if (status != SYMCHAB_OK) throw CliError{symchab_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  symchab_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Owning wrappers for the opaque handles.
struct Series {
  symchab_series* h = nullptr;
  explicit Series(const std::string& json) { check(symchab_series_parse(json.c_str(), &h)); }
  ~Series() { symchab_series_free(h); }
  Series(const Series&) = delete;
  Series& operator=(const Series&) = delete;
};

struct Box {
  symchab_box* h = nullptr;
  explicit Box(const std::string& json) { check(symchab_box_parse(json.c_str(), &h)); }
  ~Box() { symchab_box_free(h); }
  Box(const Box&) = delete;
  Box& operator=(const Box&) = delete;
};

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void flatten(const Json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, path.empty() ? k : path + "." + k, out);
  } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(path, scalar(v));
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void print_notes(const Json& env) {
  for (const auto& n : env["notes"]) std::cout << "note: " << n.get<std::string>() << "\n";
}

void print_generic(const Json& env, const std::string& format) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(env["payload"], "", rows);
  if (format == "csv") {
    std::cout << "key,value\n";
    for (const auto& [k, v] : rows) std::cout << csv_field(k) << "," << csv_field(v) << "\n";
    for (const auto& n : env["notes"]) std::cout << "note," << csv_field(n.get<std::string>()) << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  print_notes(env);
}

void emit(const std::string& envelope, const std::string& format,
          void (*table)(const Json&) = nullptr) {
  const Json env = Json::parse(envelope);
  if (format == "json") {
    std::cout << env.dump(2) << "\n";
  } else if (format == "table" && table != nullptr) {
    table(env);
  } else {
    print_generic(env, format);
  }
}

void bound_table(const Json& env) {
  const Json& p = env["payload"];
  std::cout << "bound        " << scalar(p["bound"]) << "  (~" << scalar(p["decimal"]) << ")\n";
  std::cout << "polynomial   " << scalar(p["polynomial"]) << "\n";
  if (p.contains("published_bound")) {
    std::cout << "r-dependence " << scalar(p["r_dependence"]["at_r0"]) << " + " << scalar(p["r_dependence"]["per_unit_r"])
              << " r\n";
    std::cout << "published    " << scalar(p["published_bound"]) << "  (~" << scalar(p["published_decimal"]) << ")\n";
  }
  print_notes(env);
}

void cases_table(const Json& env) {
  const Json& p = env["payload"];
  std::cout << "partition  p=" << p["p"] << " g=" << p["g"] << " t=" << p["t"] << "  D1=" << scalar(p["partition"]["D1"])
            << " D2=" << scalar(p["partition"]["D2"]) << " alpha=" << scalar(p["partition"]["alpha"]) << "\n\n";
  std::cout << "case  e  kind     tubes        zero bound\n";
  for (const auto& c : p["cases"]) {
    std::string kind = scalar(c["kind"]);
    std::string tubes = scalar(c["tubes"]);
    std::cout << scalar(c["case"]) << "    " << c["ramification"] << "  " << kind << std::string(9 - kind.size(), ' ')
              << tubes << std::string(tubes.size() < 13 ? 13 - tubes.size() : 1, ' ') << scalar(c["zero_bound"]) << "\n";
  }
  std::cout << "\nrow        zero bound\n";
  for (const auto& r : p["rows"]) {
    const std::string label = scalar(r["row"]);
    std::cout << label << std::string(11 - label.size(), ' ') << scalar(r["bound"]) << "  (~" << scalar(r["decimal"])
              << ")\n";
  }
  std::cout << "aggregate  " << scalar(p["aggregate"]) << "  (~" << scalar(p["aggregate_decimal"]) << ")\n";
  print_notes(env);
}

void cases_csv(const Json& env) {
  const Json& p = env["payload"];
  std::cout << "case,ramification,kind,tubes,zero_bound\n";
  for (const auto& c : p["cases"]) {
    std::cout << scalar(c["case"]) << "," << c["ramification"] << "," << scalar(c["kind"]) << "," << scalar(c["tubes"])
              << "," << scalar(c["zero_bound"]) << "\n";
  }
  std::cout << "row,bound\n";
  for (const auto& r : p["rows"]) std::cout << csv_field(scalar(r["row"])) << "," << scalar(r["bound"]) << "\n";
  std::cout << "aggregate," << scalar(p["aggregate"]) << "\n";
  for (const auto& n : env["notes"]) std::cout << "note," << csv_field(n.get<std::string>()) << "\n";
}

std::uint64_t effective_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("SYMCHAB_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw CliError{std::string("SYMCHAB_SEED is not an unsigned integer: ") + env};
  }
  return flag;
}

std::string rational_list_json(const std::string& csv) {
  Json arr = Json::array();
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) arr.push_back(item);
  return arr.dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds on quadratic points via tropical analysis of pure p-adic series"};
  app.set_version_flag("--version", std::string(symchab_version()));
  app.require_subcommand(1);

  std::string format = "table";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  };

  // bound
  std::int64_t g = 0;
  std::int64_t r = 0;
  std::int64_t t = 0;
  std::int64_t p = 5;
  bool hyperelliptic = false;
  auto* bound = app.add_subcommand("bound", "Uniform bound on quadratic points for genus g");
  bound->add_option("--g", g, "Genus (>= 4)")->required();
  bound->add_option("--r", r, "Mordell-Weil rank (0 <= r <= g-4)");
  bound->add_flag("--hyperelliptic", hyperelliptic, "Rank-favorable (hyperelliptic) bound");
  add_format(bound);

  // cases
  auto* cases = app.add_subcommand("cases", "Partition counts and per-case zero bounds");
  cases->add_option("--g", g, "Genus (>= 2)")->required();
  cases->add_option("--t", t, "Stoll's parameter (0 <= t <= g)")->required();
  cases->add_option("--p", p, "Prime (>= 5)");
  cases->add_option("--r", r, "Mordell-Weil rank");
  cases->add_flag("--hyperelliptic", hyperelliptic, "Rank-favorable annulus windows");
  add_format(cases);

  // verify
  std::string suite;
  std::uint64_t seed = kDefaultSeed;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites;
  {
    const char* known[] = {"theorem14", "theorem15", "corollary16", "mv-closed-forms", "annulus-cap", "bernstein",
                           "tropical",  "padic",     "dominance",   "mixed-cap",       "budget",      "all"};
    suites.assign(std::begin(known), std::end(known));
  }
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--seed", seed, "Seed for randomized suites (SYMCHAB_SEED overrides)");
  add_format(verify);

  // tropical
  std::string action;
  std::string series_path;
  std::string box_path;
  std::string w;
  std::int64_t k = 0;
  std::int64_t e = 1;
  std::int64_t rank = -1;
  auto* tropical = app.add_subcommand("tropical", "Tropical analysis of a pure series");
  tropical->add_option("action", action, "vrt | trop | aux | window")
      ->required()
      ->check(CLI::IsMember({"vrt", "trop", "aux", "window"}));
  tropical->add_option("--series", series_path, "Series JSON file");
  tropical->add_option("--box", box_path, "Box JSON file");
  tropical->add_option("--w", w, "Valuation profile for vrt, comma separated rationals");
  tropical->add_option("--k", k, "Disk window: k = ord + 1");
  tropical->add_option("--g", g, "Annulus window: genus");
  tropical->add_option("--e", e, "Ramification index");
  tropical->add_option("--p", p, "Prime (>= 5)");
  tropical->add_option("--rank", rank, "Annulus window: rank for the rank-favorable width");
  add_format(tropical);

  // mv
  std::vector<std::int64_t> a;
  std::string p1_path;
  std::string p2_path;
  auto* mv = app.add_subcommand("mv", "Mixed area of two lattice polygons");
  mv->add_option("--a", a, "Disk quadrilaterals from a11,a12,a21,a22")->delimiter(',')->expected(4);
  mv->add_option("--p1", p1_path, "First polygon JSON file");
  mv->add_option("--p2", p2_path, "Second polygon JSON file");
  add_format(mv);

  // oracle
  std::string oracle_action;
  std::string system_path;
  std::string r_text = "1";
  std::int64_t n0 = 0;
  std::int64_t cap = 200;
  auto* oracle = app.add_subcommand("oracle", "Brute-force oracles");
  oracle->add_option("action", oracle_action, "system | delta | np")
      ->required()
      ->check(CLI::IsMember({"system", "delta", "np"}));
  oracle->add_option("--system", system_path, "Finite-field system JSON file");
  oracle->add_option("--r", r_text, "Rational parameter r");
  oracle->add_option("--k", k, "delta: k");
  oracle->add_option("--n0", n0, "np: N0");
  oracle->add_option("--p", p, "Prime");
  oracle->add_option("--cap", cap, "Scan cap");
  add_format(oracle);

  CLI11_PARSE(app, argc, argv);

  try {
    if (bound->parsed()) {
      char* out = nullptr;
      check(symchab_uniform_bound(g, r, hyperelliptic ? 1 : 0, &out));
      emit(take(out), format, bound_table);
    } else if (cases->parsed()) {
      char* out = nullptr;
      check(symchab_cases(g, t, p, r, hyperelliptic ? 1 : 0, &out));
      const std::string env = take(out);
      if (format == "csv") {
        cases_csv(Json::parse(env));
      } else {
        emit(env, format, cases_table);
      }
    } else if (verify->parsed()) {
      symchab_report* report = nullptr;
      check(symchab_verify(suite.c_str(), effective_seed(seed), &report));
      int passed = 0;
      char* out = nullptr;
      symchab_report_passed(report, &passed);
      const int status = format == "table" ? symchab_report_text(report, &out) : symchab_report_json(report, &out);
      symchab_report_free(report);
      check(status);
      const std::string text = take(out);
      if (format == "table") {
        std::cout << text;
      } else {
        emit(text, format);
      }
      return passed ? kOk : kVerifyFailed;
    } else if (tropical->parsed()) {
      if (action == "window") {
        std::int64_t width = 0;
        if (k > 0) {
          check(symchab_disk_window(k, e, p, &width));
        } else {
          if (g == 0) throw CliError{"window needs --k (disk) or --g (annulus)"};
          check(symchab_annulus_window(g, e, p, rank >= 0 ? 1 : 0, rank, &width));
        }
        const Json env = {{"payload", {{"window", width}}}, {"notes", Json::array()}};
        emit(env.dump(), format);
        return kOk;
      }
      if (series_path.empty()) throw CliError{action + " needs --series"};
      Series f(read_file(series_path));
      char* out = nullptr;
      if (action == "vrt" && !w.empty()) {
        check(symchab_vrt(f.h, rational_list_json(w).c_str(), &out));
      } else {
        if (box_path.empty()) throw CliError{action + " needs --box" + (action == "vrt" ? " or --w" : "")};
        Box box(read_file(box_path));
        if (action == "vrt") {
          check(symchab_vrt_box(f.h, box.h, &out));
        } else if (action == "trop") {
          check(symchab_trop(f.h, box.h, &out));
        } else {
          check(symchab_aux(f.h, box.h, &out));
        }
      }
      emit(take(out), format);
    } else if (mv->parsed()) {
      Json in;
      if (!a.empty()) {
        in = {{"a", {{a[0], a[1]}, {a[2], a[3]}}}};
      } else {
        if (p1_path.empty() || p2_path.empty()) throw CliError{"mv needs --a or both --p1 and --p2"};
        in = {{"P1", Json::parse(read_file(p1_path))}, {"P2", Json::parse(read_file(p2_path))}};
      }
      char* out = nullptr;
      check(symchab_mv(in.dump().c_str(), &out));
      emit(take(out), format);
    } else if (oracle->parsed()) {
      char* out = nullptr;
      if (oracle_action == "system") {
        if (system_path.empty()) throw CliError{"oracle system needs --system"};
        check(symchab_oracle_system(read_file(system_path).c_str(), &out));
      } else if (oracle_action == "delta") {
        check(symchab_oracle_delta(r_text.c_str(), k, p, cap, &out));
      } else {
        check(symchab_oracle_np(r_text.c_str(), n0, p, cap, &out));
      }
      emit(take(out), format);
    }
  } catch (const CliError& err) {
    std::cerr << "error: " << err.message << "\n";
    return kError;
  } catch (const nlohmann::json::exception& err) {
    std::cerr << "error: invalid JSON: " << err.what() << "\n";
    return kError;
  }
  return kOk;
}
