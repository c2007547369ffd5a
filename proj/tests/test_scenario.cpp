#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cdgforge/verify.hpp"

using namespace cdgforge;

TEST_CASE("empty command list gives exit 0 and an empty report") {
    ScenarioOptions opt;
    ScenarioResult r = run_scenario_text(R"({"field": 3, "commands": []})", opt);
    CHECK(r.exit_code == 0);
    CHECK(r.records.empty());
}

TEST_CASE("parse errors exit with code 2") {
    ScenarioOptions opt;
    CHECK(run_scenario_text("{ not json", opt).exit_code == 2);
    CHECK(run_scenario_text(R"({"commands": [{"op": 17}]})", opt).exit_code == 2);
    CHECK(run_scenario_file("/nonexistent/file.json", opt).exit_code == 2);
}

TEST_CASE("validation errors exit with code 3") {
    ScenarioOptions opt;
    /* x acts as the identity: violates x^2 = 0 */
    std::string bad = R"({
      "field": 3,
      "algebras": {"S2": {"kind": "truncated_polynomial", "n": 2}},
      "modules": {"M": {"algebra": "S2", "dim": 1, "action": [[[1]], [[1]]]}},
      "commands": []
    })";
    ScenarioResult r = run_scenario_text(bad, opt);
    CHECK(r.exit_code == 3);
    /* unknown op is a validation error too */
    ScenarioResult r2 = run_scenario_text(R"({"commands": [{"op": "frobnicate"}]})", opt);
    CHECK(r2.exit_code == 3);
}

TEST_CASE("assertion failures exit with code 1") {
    ScenarioOptions opt;
    std::string text = R"({
      "field": 3,
      "algebras": {"S2": {"kind": "truncated_polynomial", "n": 2}},
      "modules": {"k": {"algebra": "S2", "kind": "jordan", "size": 1}},
      "commands": [{"op": "ext1", "m": "k", "n": "k", "expect": {"dim": 7}}]
    })";
    ScenarioResult r = run_scenario_text(text, opt);
    CHECK(r.exit_code == 1);
    REQUIRE(r.records.size() == 1);
    CHECK_FALSE(r.records[0].pass);
    CHECK(r.records[0].lhs_dims == std::vector<long long>{1});
    CHECK(r.records[0].rhs_dims == std::vector<long long>{7});
}

TEST_CASE("tag filtering") {
    ScenarioOptions opt;
    opt.only_tag = "wanted";
    std::string text = R"({
      "field": 3,
      "algebras": {"S2": {"kind": "truncated_polynomial", "n": 2}},
      "modules": {"k": {"algebra": "S2", "kind": "jordan", "size": 1}},
      "commands": [
        {"op": "ext1", "m": "k", "n": "k", "expect": {"dim": 1}, "tag": "wanted"},
        {"op": "ext1", "m": "k", "n": "k", "expect": {"dim": 999}, "tag": "other"}
      ]
    })";
    ScenarioResult r = run_scenario_text(text, opt);
    CHECK(r.exit_code == 0);
    CHECK(r.records.size() == 1);
}

TEST_CASE("field override changes the session field") {
    ScenarioOptions opt;
    opt.field_override = 5;
    std::string text = R"({
      "field": 3,
      "algebras": {"S2": {"kind": "truncated_polynomial", "n": 2}},
      "modules": {"k": {"algebra": "S2", "kind": "jordan", "size": 1}},
      "commands": [{"op": "ext1", "m": "k", "n": "k", "expect": {"dim": 1}}]
    })";
    CHECK(run_scenario_text(text, opt).exit_code == 0); /* same answer over F5 */
}

TEST_CASE("records serialize deterministically") {
    std::vector<Record> recs{{"a", true, {1, 2}, {3}, false}, {"b", false, {}, {}, true}};
    std::string one = records_to_json(recs, 7);
    std::string two = records_to_json(recs, 7);
    CHECK(one == two);
    CHECK(one.find("\"witness-present\": true") != std::string::npos);
    CHECK(one.find("\"status\": \"fail\"") != std::string::npos);
}

TEST_CASE("verify runs are reproducible per seed in-process") {
    VerifyOptions opt;
    opt.random_count = 5;
    auto a = run_verify("curvature", opt);
    auto b = run_verify("curvature", opt);
    CHECK(verify_results_json(a, opt) == verify_results_json(b, opt));
    CHECK_THROWS_AS(run_verify("nonsense", opt), ValidationError);
    VerifyOptions degenerate;
    degenerate.window_lo = 0;
    degenerate.window_hi = 0;
    CHECK_THROWS_AS(run_verify("bar", degenerate), ValidationError);
}
