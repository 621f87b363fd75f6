#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "jumpnum/report.hpp"
#include "support.hpp"

using namespace jumpnum;
using testing_support::fixture;

namespace {

std::string message_of(const std::string& text) {
  try {
    parse_fixture_text(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("chain736 loads with the expected divisors and restrictions") {
  const auto data = fixture("chain736.json");
  REQUIRE(data.divisors.size() == 5);
  const std::vector<std::tuple<std::string, std::int64_t, std::int64_t>> expected = {
      {"D1", 2, 0}, {"D2", 1, 0}, {"E1", 7, 2}, {"E2", 3, 1}, {"E3", 6, 2}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(data.divisors[i].id == std::get<0>(expected[i]));
    CHECK(data.divisors[i].mult == std::get<1>(expected[i]));
    CHECK(data.divisors[i].discrepancy == std::get<2>(expected[i]));
  }
  const auto& lat = data.lattice("E1");
  CHECK(*lat.restriction("E1") == PicClass({-1, 0, 0}));
  CHECK(*lat.restriction("E2") == PicClass({0, 1, -1}));
  CHECK(*lat.restriction("E3") == PicClass({0, 0, 1}));
  CHECK(*lat.restriction("D1") == PicClass({3, -1, -1}));
  CHECK(*lat.restriction("D2") == PicClass({1, -1, -1}));
}

TEST_CASE("cusp fixture shape") {
  const auto data = fixture("cusp.json");
  CHECK(data.divisors.size() == 4);
  CHECK(data.dual_graph->size() == 3);
}

TEST_CASE("malformed input is reported with a position") {
  const auto empty = message_of("");
  CHECK_FALSE(empty.empty());
  const auto broken = message_of("{\n  \"ambient_dim\": 2,\n  \"divisors\": [\n}");
  CHECK(broken.find("line 4") != std::string::npos);
}

TEST_CASE("strict schema") {
  CHECK(message_of(R"({"ambient_dim": 2, "divisors": [], "extra": 1})").find("unknown key 'extra'") != std::string::npos);
  CHECK(message_of(R"({"divisors": []})").find("ambient_dim") != std::string::npos);
  CHECK(message_of(R"({"ambient_dim": 2, "divisors": [{"id": "E", "mult": "2", "discrepancy": 1, "kind": "exceptional"}]})")
            .find("$.divisors[0].mult") != std::string::npos);
  CHECK(message_of(R"({"ambient_dim": 2, "divisors": [{"id": "E", "mult": 2, "discrepancy": 1, "kind": "weird"}]})")
            .find("kind") != std::string::npos);
  CHECK(message_of(R"({"ambient_dim": 3, "divisors": [], "lattices": {"E": {"n": 3, "centres": []}}})")
            .find("unknown key 'centres'") != std::string::npos);
  CHECK(message_of(R"({"ambient_dim": 2.5, "divisors": []})").find("integer") != std::string::npos);
}

TEST_CASE("validation gate and --force") {
  const std::string path = "/tmp/jumpnum_bad_cusp.json";
  auto data = fixture("cusp.json");
  data.divisors[3].mult = 5;
  std::ofstream(path) << fixture_to_json(data).dump(2);
  CHECK_THROWS_AS(load_fixture(path), ValidationFailed);
  CHECK(load_fixture(path, true) == data);
  try {
    load_fixture(path);
  } catch (const ValidationFailed& e) {
    CHECK_FALSE(e.diagnostics().empty());
  }
}

TEST_CASE("fixture search path") {
  CHECK_THROWS_AS(load_fixture("definitely-missing.json"), ParseError);
  ::setenv(kFixturePathVariable, (std::string("/nonexistent:") + JUMPNUM_FIXTURE_DIR).c_str(), 1);
  CHECK(load_fixture("node.json") == fixture("node.json"));
  CHECK(load_fixture("xpyq/x2y3.json") == fixture("cusp.json"));
  ::unsetenv(kFixturePathVariable);
  CHECK_THROWS_AS(load_fixture("node.json"), ParseError);
}

TEST_CASE("property: round trip through the JSON report") {
  for (const auto& path : testing_support::all_fixture_files()) {
    CAPTURE(path);
    const auto data = load_fixture(path);
    CHECK(fixture_from_json(fixture_to_json(data)) == data);
    const auto doc = report_json(data);
    CHECK(doc.contains("analysis"));
    CHECK(parse_fixture_text(doc.dump()) == data);
  }
}

TEST_CASE("dot output is deterministic") {
  const auto cusp = report_dot(fixture("cusp.json"));
  CHECK(cusp.rfind("graph dual_graph {", 0) == 0);
  CHECK(cusp.find("\"E1\" -- \"E3\" [label=\"1\"]") != std::string::npos);
  CHECK(report_dot(fixture("cusp.json")) == cusp);
  const auto lat = report_dot(fixture("quartic_cone.json"));
  CHECK(lat.rfind("digraph lattices {", 0) == 0);
  CHECK(lat.find("\"E0:Z4\" -> \"E0:Z2\" [label=\"proximate\"]") != std::string::npos);
}

TEST_CASE("text report mentions the key facts") {
  const auto text = report_text(fixture("chain736.json"));
  CHECK(text.find("lct: 3/7 (E1)") != std::string::npos);
  CHECK(text.find("lambda 6/7: does-not-contribute") != std::string::npos);
  CHECK(text.find("lambda 3/7: contributes") != std::string::npos);
}
