#include "doctest.h"

#include "phinkit/error.hpp"
#include "phinkit/io/commands.hpp"

#include <fstream>
#include <sstream>

using namespace phinkit::io;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(PHINKIT_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult analyze(const std::string& text) { return run("phin-analyze", text, Json::object(), {}, "json"); }

const char* kTate = R"({"schema": 1, "p": 2, "a": 1, "d": 1, "phi": [["1","0"],["0","2"]],
  "N": [["0","1"],["0","0"]], "fil": {"0": [["1","0"],["0","1"]], "1": [["1","1"]]}})";

} // namespace

TEST_CASE("FNV-1a reference values") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("rationals and matrices") {
  CHECK(read_rational(Json("-3/6"), "x") == phinkit::linalg::Rational(-1, 2));
  CHECK(read_rational(Json(4), "x") == 4);
  CHECK_THROWS_AS(read_rational(Json("1/0"), "x"), phinkit::InvalidInput);
  CHECK_THROWS_AS(read_rational(Json(0.5), "x"), phinkit::InvalidInput);
  phinkit::linalg::Rational r(6, 4);
  r.canonicalize();
  CHECK(to_json(r) == Json("3/2"));
  CHECK(to_json(phinkit::linalg::Rational(5)) == Json("5"));
  CHECK_THROWS_AS(read_matrix(Json::parse(R"([["1","2"],["3"]])"), "m"), phinkit::InvalidInput);
}

TEST_CASE("strict module parsing") {
  CHECK(analyze(kTate).exit_code == 0);
  auto j = Json::parse(kTate);
  j["extra"] = 1;
  CHECK(analyze(j.dump()).exit_code == 1);
  j = Json::parse(kTate);
  j.erase("schema");
  CHECK(analyze(j.dump()).exit_code == 1);
  j = Json::parse(kTate);
  j["schema"] = 2;
  CHECK(analyze(j.dump()).exit_code == 1);
  j = Json::parse(kTate);
  j["fil"]["x"] = Json::array();
  CHECK(analyze(j.dump()).exit_code == 1);
  CHECK(analyze("{not json").exit_code == 1);
  j = Json::parse(kTate);
  j["phi"] = Json::parse(R"([["0","0"],["0","2"]])");
  const auto res = analyze(j.dump());
  CHECK(res.exit_code == 2);
  CHECK(Json::parse(res.out)["error"]["name"] == "non-invertible phi");
}

TEST_CASE("reports carry the input hash, the seed and every clause") {
  RunOptions opts;
  opts.seed = 5;
  const auto input = Json::parse(kTate);
  const Json rep = report("phin-analyze", input, opts);
  CHECK(rep["input_hash"] == fnv1a_hex(input.dump()));
  CHECK(rep["seed"] == 5);
  CHECK(rep["schema"] == 1);
  for (const char* c : {"weakly_admissible", "ordinary", "monodromy_weight", "kernel_image"}) {
    REQUIRE(rep["clauses"].contains(c));
    CHECK(rep["clauses"][c]["pass"] == true);
    CHECK(rep["clauses"][c]["statement"].is_string());
  }
  CHECK(rep["result"]["t_N"] == "1");
  CHECK(rep["result"]["t_H"] == "1");
  CHECK(rep["result"]["admissibility"]["admissible"] == true);
  CHECK(rep["result"]["monodromy_weight"]["equal"] == true);
  CHECK(report("phin-analyze", input, opts).dump() == rep.dump());
}

TEST_CASE("command dispatch") {
  CHECK_THROWS_AS(execute("nope", Json::object(), {}), phinkit::InvalidInput);
  CHECK(run("nope", "", Json::object(), {}, "json").exit_code == 1);
  const auto arr = run("drinfeld-arrangement", "", Json{{"r", 2}, {"q", 2}}, {}, "json");
  REQUIRE(arr.exit_code == 0);
  const Json a = Json::parse(arr.out);
  CHECK(a["result"]["betti"] == Json::parse(R"(["1","6","8"])"));
  CHECK(a["result"]["cross_check"] == "pass");
  CHECK(run("drinfeld-arrangement", "", Json{{"r", 2}, {"q", 6}}, {}, "json").exit_code == 2);
  CHECK(run("drinfeld-arrangement", "", Json{{"r", 2}}, {}, "json").exit_code == 1);
  CHECK(run("drinfeld-arrangement", "", Json{{"r", 2}, {"q", 2}, {"x", 1}}, {}, "json").exit_code == 1);
  RunOptions small;
  small.budget = 5;
  CHECK(run("drinfeld-ball", "", Json{{"d", 2}, {"p", 2}, {"n", 2}}, small, "json").exit_code == 2);
}

TEST_CASE("spectral inputs") {
  const auto cech = run("ss-cech", golden("triangle_nerve.json"), Json::object(), {}, "json");
  REQUIRE(cech.exit_code == 0);
  CHECK(Json::parse(cech.out)["result"]["cohomology_dims"] == Json::parse("[[0,1],[1,1],[2,0]]"));
  auto bad = Json::parse(golden("triangle_nerve.json"));
  bad["strata"][0]["components"] = Json::parse("[7]");
  CHECK(run("ss-cech", bad.dump(), Json::object(), {}, "json").exit_code == 1);
  auto cx = Json::parse(golden("filtered_complex.json"));
  cx["levels"] = Json::parse("[[0, 2], [1, 2]]");
  // x1 now sits at level 2 but maps onto y0 at level 1.
  CHECK(run("ss-pages", cx.dump(), Json::object(), {}, "json").exit_code == 2);
}

TEST_CASE("text rendering") {
  const Json j = {{"b", {{"c", 1}}}, {"a", Json::array({{{"x", "y"}}})}, {"z", Json::array({1, 2})}};
  CHECK(to_text(j) == "a[0].x = y\nb.c = 1\nz = [1,2]\n");
}
