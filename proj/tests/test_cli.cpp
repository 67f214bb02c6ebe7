#include <filesystem>
#include <regex>
#include <fstream>
#include <sstream>

#include "cli_util.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

std::string test_file(const std::string& name) { return std::string(HILFER_TEST_DATA_DIR) + "/" + name; }

std::string read(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

// Replaces every value by its type name; arrays keep the schema of their first element.
json schema_of(const json& v) {
  if (v.is_object()) {
    json out = json::object();
    for (const auto& [k, x] : v.items()) out[k] = schema_of(x);
    return out;
  }
  if (v.is_array()) {
    return v.empty() ? json::array() : json::array({schema_of(v.front())});
  }
  if (v.is_number()) return "number";
  if (v.is_boolean()) return "boolean";
  if (v.is_string()) return "string";
  return "null";
}

bool has_non_finite_text(const std::string& s) {
  static const std::regex token(R"(\b(nan|inf|infinity)\b)", std::regex::icase);
  return std::regex_search(s, token);
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hilferbvp_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze the bundled worked example") {
  const auto r = run("analyze " + data_file("worked_example.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("Delta") != std::string::npos);
  CHECK(r.out.find("0.3912489668") != std::string::npos);
  CHECK(r.out.find("uniqueness (L*Omega < 1): yes") != std::string::npos);
}

TEST_CASE("analyze JSON follows the golden schema and is stable") {
  const auto a = run("analyze --json " + data_file("worked_example.json"));
  const auto b = run("analyze --json " + data_file("worked_example.json"));
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = json::parse(a.out);
  const auto golden = json::parse(read(std::string(HILFER_GOLDEN_DIR) + "/analyze_schema.json"));
  CHECK(schema_of(doc) == golden);
  CHECK(!doc.contains("solve"));
  CHECK(!doc.contains("stability"));
}

TEST_CASE("solve JSON follows the golden schema") {
  const auto r = run("solve --json " + data_file("worked_example_nontrivial.json"));
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  const auto golden = json::parse(read(std::string(HILFER_GOLDEN_DIR) + "/solve_schema.json"));
  CHECK(schema_of(doc) == golden);
}

TEST_CASE("analyze exit codes") {
  CHECK(run("analyze " + test_file("zero_rhs.json")).code == 0);
  CHECK(run("analyze " + test_file("steep.json")).code == 2);
  const auto bad = run("analyze " + test_file("bad_alpha.json"), true);
  CHECK(bad.code == 1);
  CHECK(bad.out.find("alpha must be in (1,2)") != std::string::npos);
  const auto broken = run("analyze " + test_file("malformed.json"), true);
  CHECK(broken.code == 1);
  CHECK(broken.out.find("byte") != std::string::npos);
  CHECK(run("analyze /nonexistent.json").code == 1);
  CHECK(run("analyze").code == 1);
  CHECK(run("frobnicate").code == 1);
}

TEST_CASE("solve writes the csv files") {
  const auto csv = temp_path("solution.csv");
  const auto hist = temp_path("history.csv");
  const auto r = run("solve " + data_file("worked_example_nontrivial.json") + " --out " + csv.string() + " --history-out " +
                     hist.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("iterations:") != std::string::npos);
  CHECK(r.out.find("boundary_residual:") != std::string::npos);
  const std::string text = read(csv);
  CHECK(text.rfind("t,x\n0,0\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  CHECK(text.find(" \n") == std::string::npos);
  CHECK(read(hist).rfind("iteration,diff\n1,", 0) == 0);
  std::filesystem::remove(csv);
  std::filesystem::remove(hist);
}

TEST_CASE("solve exit codes") {
  CHECK(run("solve " + data_file("worked_example.json")).code == 0);
  const auto zero = run("solve " + test_file("zero_rhs.json"));
  CHECK(zero.code == 0);
  CHECK(zero.out.find("iterations: 1") != std::string::npos);
  const auto stalled = run("solve " + data_file("worked_example_nontrivial.json") + " --max-iter 2 --tol 1e-14", true);
  CHECK(stalled.code == 3);
  CHECK(stalled.out.find("last successive differences") != std::string::npos);
  CHECK(run("solve " + data_file("worked_example.json") + " --grid-n 2").code == 1);
  CHECK(run("solve " + data_file("worked_example.json") + " --tol -1").code == 1);
}

TEST_CASE("solver flags reach the solver") {
  const auto r = run("solve --json --grid-n 101 --rule-order 30 --tol 1e-9 --max-iter 50 --linear-interp " +
                     data_file("worked_example_nontrivial.json"));
  const auto doc = json::parse(r.out);
  CHECK(doc["config"]["solver"]["grid_n"] == 101);
  CHECK(doc["config"]["solver"]["rule_order"] == 30);
  CHECK(doc["config"]["solver"]["tol"] == 1e-9);
  CHECK(doc["config"]["solver"]["max_iter"] == 50);
  CHECK(doc["config"]["solver"]["interpolation"] == "linear");
  const auto u = run("solve --json --uniform-mesh " + data_file("worked_example_nontrivial.json"));
  CHECK(json::parse(u.out)["config"]["solver"]["uniform_mesh"] == true);
}

TEST_CASE("stability command") {
  const auto report = temp_path("stability.json");
  const auto r = run("stability " + data_file("worked_example_nontrivial.json") + " --eps 1e-3 --out " + report.string());
  CHECK(r.code == 0);
  const auto doc = json::parse(read(report));
  for (const char* key : {"tool_version", "config", "analysis", "solve", "stability"}) CHECK(doc.contains(key));
  CHECK(doc["stability"]["reports"].size() == 4);
  CHECK(schema_of(doc) == json::parse(read(std::string(HILFER_GOLDEN_DIR) + "/stability_schema.json")));
  std::filesystem::remove(report);

  const auto zero = run("stability " + data_file("worked_example_nontrivial.json") + " --eps 0", true);
  CHECK(zero.code == 1);
  CHECK(zero.out.find("epsilon must be positive") != std::string::npos);
  const auto steep = run("stability " + test_file("steep.json") + " --eps 1e-3", true);
  CHECK(steep.code == 1);
  CHECK(steep.out.find("C_f undefined: LΩ ≥ 1") != std::string::npos);
}

TEST_CASE("degenerate problems exit 2 without non-finite numbers") {
  const auto a = run("analyze --json " + test_file("resonant.json"));
  CHECK(a.code == 2);
  CHECK(!has_non_finite_text(a.out));
  const auto doc = json::parse(a.out);
  CHECK(doc["analysis"]["resonant"] == true);
  CHECK(doc["analysis"]["omega"].is_null());
  const auto t = run("analyze " + test_file("resonant.json"));
  CHECK(t.code == 2);
  CHECK(!has_non_finite_text(t.out));
  const auto s = run("solve --json " + test_file("resonant.json"), true);
  CHECK(s.code == 2);
  CHECK(!has_non_finite_text(s.out));
  CHECK(run("stability " + test_file("resonant.json") + " --eps 1e-3").code == 1);
}

TEST_CASE("verify-example") {
  const auto r = run("verify-example");
  CHECK(r.out.find("quantity") != std::string::npos);
  CHECK(r.out.find("gamma") != std::string::npos);
  CHECK(r.code == (r.out.find("FAIL") == std::string::npos ? 0 : 2));
  const auto strict = run("verify-example --omega-tol 1e-12");
  CHECK(strict.code == 2);
  const auto quiet = run("verify-example --quiet");
  CHECK(quiet.out.empty());
  CHECK(quiet.code == r.code);
}

TEST_CASE("selftest") {
  const auto r = run("selftest");
  CHECK(r.code == 0);
  CHECK(r.out.find("checks passed") != std::string::npos);
  CHECK(run("selftest --quiet").out.empty());
}

TEST_CASE("version") {
  const auto r = run("--version");
  CHECK(r.code == 0);
  CHECK(!r.out.empty());
}

}  // TEST_SUITE
