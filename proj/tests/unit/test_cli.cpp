#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "slicekit/cli.hpp"
#include "slicekit/render.hpp"
#include "support.hpp"

using namespace slicekit;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
  const auto o = invoke(std::move(args));
  REQUIRE(o.code == 0);
  auto j = Json::parse(o.out);
  j.erase("meta");
  return j;
}

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++count;
  return count;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("slicekit_test_" + name)).string();
}

}  // namespace

TEST_CASE("analyze C-C") {
  const auto j = invoke_json({"analyze", testing::fixture("ex1")});
  CHECK(j["covering"] == true);
  CHECK(j["xi"]["u"] == Json::array({-3, -2, 1, 2}));
  CHECK(j["u1"]["dim"] == "0.630929753571");
  CHECK(j["u1"]["measure_class"] == "PositiveFinite");
  CHECK(j["r_search"]["applicable"] == true);
  CHECK(j["r_search"]["entries"][2]["status"] == "OnlyOnCountableSet");
  CHECK(j["M"]["radius"]["lower"].is_string());
  for (const auto& key : {"bounds", "ssc", "integer_intervals", "T", "graphs", "ur"}) CHECK(j.contains(key));
}

TEST_CASE("analyze without the hypotheses") {
  const auto j = invoke_json({"analyze", testing::fixture("ex3")});
  CHECK(j["r_search"]["applicable"] == false);
  CHECK(j["r_search"]["reason"] == "strong separation fails");
  CHECK(j["ur"].empty());
  CHECK(j["xi"]["u"].size() == 7);
}

TEST_CASE("count 1/3") {
  auto o = invoke({"count", testing::fixture("ex1"), "--x", "1/3"});
  CHECK(o.code == 0);
  CHECK(o.out.find("count.result = Finite(3)") != std::string::npos);
  const auto j = invoke_json({"count", testing::fixture("ex1"), "--x", "1/3", "--json"});
  CHECK(j["count"]["value"] == 3);
  CHECK(j["count"]["expansion"]["boundary"] == true);
  o = invoke({"count", testing::fixture("ex1"), "--x", "1/4", "--budget", "1"});
  CHECK(o.code == 3);
  o = invoke({"count", testing::fixture("ex3"), "--x", "1/4"});
  CHECK(o.code == 2);
  o = invoke({"count", testing::fixture("ex1"), "--x", "0.25"});
  CHECK(o.code == 1);
  o = invoke({"count", testing::fixture("ex1")});
  CHECK(o.code == 1);
}

TEST_CASE("oracle and other commands") {
  auto j = invoke_json({"oracle", testing::fixture("ex1"), "--x", "1/3", "--depth", "2", "--json"});
  CHECK(j["oracle"]["count"] == 3);
  CHECK(j["oracle"]["chains"][0]["digits"] == Json::array({Json::array({0, 0}), Json::array({0, 2})}));
  CHECK(invoke({"oracle", testing::fixture("ex1"), "--x", "5/2"}).code == 2);

  j = invoke_json({"dim-ur", testing::fixture("ex1"), "--r", "2", "--json"});
  CHECK(j["ur"]["measure_class"] == "Infinite");
  j = invoke_json({"witness", testing::fixture("ex1"), "--r", "4", "--json"});
  CHECK(j["witness"]["verified"] == true);
  CHECK(invoke({"witness", testing::fixture("ex1"), "--r", "5"}).code == 2);
  CHECK(invoke({"enumerate-r", testing::fixture("ex3")}).code == 2);

  j = invoke_json({"matrices", testing::fixture("ex4"), "--json"});
  CHECK(j["M"]["rows"].size() == 8);
  CHECK(j["T"]["matrices"].size() == 6);
  j = invoke_json({"dim-u1", testing::fixture("ex4"), "--json"});
  CHECK(j["u1"]["measure_class"] == "PositiveOnly");
  j = invoke_json({"check", testing::fixture("cover_counterexample"), "--json"});
  CHECK(j["covering"] == false);
}

TEST_CASE("lyapunov is reproducible") {
  const std::vector<std::string> args{"lyapunov", testing::fixture("ex1"), "--samples", "50", "--depth", "40", "--seed", "9", "--json"};
  CHECK(invoke_json(args) == invoke_json(args));
  CHECK(invoke({"lyapunov", testing::fixture("cover_counterexample")}).code == 2);
}

TEST_CASE("reports are byte-identical apart from meta") {
  for (const auto& name : {"ex1", "ex1b", "ex3", "ex4", "ex5", "cube3", "trivial", "cover_counterexample"})
    CHECK(invoke_json({"analyze", testing::fixture(name)}).dump() == invoke_json({"analyze", testing::fixture(name)}).dump());
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"bogus", testing::fixture("ex1")}).code == 1);
  CHECK(invoke({"check", testing::fixture("missing")}).code == 1);
  CHECK(invoke({"dim-ur", testing::fixture("ex1")}).code == 1);
  const auto v = invoke({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out == std::string(kVersion) + "\n");
}

TEST_CASE("render") {
  auto svg = render_grid(testing::cc(), 1);
  CHECK(occurrences(svg, "class=\"cube\"") == 4);
  CHECK(occurrences(svg, "class=\"interval-label\"") == 6);
  CHECK(occurrences(svg, "class=\"working-label\"") == 2);
  CHECK(svg.find("width=\"800\"") != std::string::npos);
  CHECK(occurrences(render_grid(testing::load("ex4"), 1), "class=\"cube\"") == 9);
  CHECK(occurrences(render_grid(testing::cc(), 2), "class=\"cube\"") == 16);
  svg = render_grid(testing::cc(), 0);
  CHECK(occurrences(svg, "class=\"cube\"") == 0);
  CHECK(occurrences(svg, "class=\"unit-square\"") == 1);
  CHECK(render_grid(testing::cc(), 2) == render_grid(testing::cc(), 2));

  const auto path = temp_path("fig.svg");
  auto o = invoke({"render", testing::fixture("ex1"), "--depth", "1", "--out", path});
  CHECK(o.code == 0);
  std::ifstream file(path);
  const std::string written((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
  CHECK(written == render_grid(testing::cc(), 1));
  std::filesystem::remove(path);

  o = invoke({"render", testing::fixture("cube3"), "--depth", "1", "--out", path});
  CHECK(o.code == 1);
  CHECK(o.err.find("render requires l=2") != std::string::npos);
  CHECK(invoke({"render", testing::fixture("ex1"), "--depth", "12"}).code == 3);
  CHECK(occurrences(invoke({"render", testing::fixture("ex1")}).out, "class=\"cube\"") == 4);
}

TEST_CASE("warning for very wide instances") {
  const auto path = temp_path("wide.json");
  {
    std::ofstream f(path);
    f << R"({"n":8,"digit_sets":[[0,1,2,3,4,5,6,7],[0,1,2,3,4,5,6,7],[0,1,2,3,4,5,6,7],[0,1,2,3,4,5,6,7],)"
      << R"([0,1,2,3,4,5,6,7],[0,1,2,3,4,5,6,7],[0,1,2,3,4,5,6,7]],"coefficients":[1,1,1,1,1,1,1]})";
  }
  const auto o = invoke({"check", path});
  CHECK(o.code == 0);
  CHECK(o.err.find("warning") != std::string::npos);
  std::filesystem::remove(path);
}
