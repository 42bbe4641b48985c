#include <doctest.h>

#include "qm/error.hpp"
#include "qmcli/config.hpp"
#include "qmcli/runner.hpp"

using namespace qmcli;

TEST_CASE("config parsing") {
  const auto cfg = parse_config(R"(
# comment
group = B2
multiplicities = 1, 0
degree_cap = 10   # trailing comment
checks = freeness, duality
output = out/b2.json
)");
  CHECK(cfg.group == "B2");
  CHECK(cfg.multiplicities == std::vector<unsigned>{1, 0});
  CHECK(cfg.degree_cap == 10u);
  CHECK(cfg.checks == std::vector<std::string>{"freeness", "duality"});
  CHECK(cfg.output == "out/b2.json");
  CHECK(cfg.name == "scenario");

  CHECK_THROWS_AS(parse_config("group = A1\nchecks = nope\n"), qm::ParseError);
  CHECK_THROWS_AS(parse_config("group = A1\ncolour = red\nchecks = poincare\n"), qm::ParseError);
  CHECK_THROWS_AS(parse_config("checks = poincare\n"), qm::ParseError);
  CHECK_THROWS_AS(parse_config("group = A1\n"), qm::ParseError);
  CHECK_THROWS_AS(parse_config("group = A1\ndegree_cap = -1\nchecks = poincare\n"), qm::ParseError);
  CHECK_NOTHROW(parse_config("checks = fv-counterexample-b6\n"));
}

TEST_CASE("registered checks") {
  CHECK(registered_checks().size() == 15);
  for (const char* id : {"poincare", "freeness", "duality", "gorenstein-stanley", "detA", "linindep", "fv-conjectures",
                         "fv-counterexample-b6", "shift-a1", "arrangement-lines", "commutators"})
    CHECK(is_registered(id));
}

TEST_CASE("running a scenario") {
  auto cfg = parse_config("group = (Z/2)^2\nmultiplicities = 1\ndegree_cap = 12\nchecks = detA, poincare, freeness, duality\n");
  const auto report = run_scenario(cfg);
  CHECK(report["schema_version"] == kSchemaVersion);
  REQUIRE(report["results"].size() == 4);
  // registry order, not config order
  CHECK(report["results"][0]["check"] == "poincare");
  for (const auto& r : report["results"]) {
    CHECK(r["verdict"] == "PASS");
    CHECK_FALSE(r["anchor"].get<std::string>().empty());
  }
  CHECK(report["poincare"]["coefficients"] == Json({1, 0, 2, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}));
  CHECK(exit_code(report) == 0);

  // same scenario again: identical modulo timings
  CHECK(diff_reports(report, run_scenario(cfg)).empty());

  // a different cap only moves the series tails
  cfg.degree_cap = 10;
  const auto d = diff_reports(report, run_scenario(cfg));
  CHECK_FALSE(d.empty());
  for (const auto& op : d) {
    const auto path = op["path"].get<std::string>();
    const bool allowed = path.rfind("/poincare/coefficients", 0) == 0 || path.rfind("/metadata/config/degree_cap", 0) == 0 ||
                         path.rfind("/scenario/degree_cap", 0) == 0 ||
                         path.rfind("/results/0/witness/coefficients", 0) == 0 ||
                         path.rfind("/results/1/witness/rows", 0) == 0;
    CAPTURE(path);
    CHECK(allowed);
  }
}

TEST_CASE("verdicts and errors") {
  const auto b6 = run_scenario(parse_config("checks = fv-counterexample-b6\n"));
  CHECK(b6["results"][0]["verdict"] == "FINDING");
  CHECK(exit_code(b6) == 1);

  CHECK_THROWS_AS(run_scenario(parse_config("group = I2(5)\nchecks = poincare\n")), qm::UnsupportedType);
  CHECK_THROWS_AS(run_scenario(parse_config("group = A2\ndegree_cap = 3\nchecks = duality\n")), qm::CapExceeded);
  CHECK_THROWS_AS(run_scenario(parse_config("group = B2\nchecks = shift-a1\n")), qm::ParseError);

  Json a = {{"schema_version", 1}, {"results", Json::array()}};
  Json b = {{"schema_version", 2}, {"results", Json::array()}};
  CHECK_THROWS_AS(diff_reports(a, b), qm::Error);
  CHECK_THROWS_AS(diff_reports(a, Json::object()), qm::Error);
}
