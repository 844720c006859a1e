#include <doctest.h>

#include "commands.hpp"
#include "report.hpp"
#include "scenario.hpp"
#include "vmts/social.hpp"

using namespace vmts;
using namespace vmts::cli;

namespace {

Json parse_json(const std::string& text) { return Json::parse(text); }

const char* kBefriendScenario = R"({
  "protocol": "sg",
  "agents": ["a", "b", "r"],
  "steps": [
    {"kind": "will", "agent": "a", "add": [{"op": "befriend", "agents": ["a", "b"]}]},
    {"kind": "will", "agent": "b", "add": [{"op": "befriend", "agents": ["a", "b"]}]},
    {"kind": "fire", "op": "befriend", "agents": ["a", "b"]}
  ]
})";

}  // namespace

TEST_CASE("scenario validation rejects malformed inputs") {
  CHECK_THROWS_AS(parse_scenario("not json"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"protocol":"nope","agents":["a"]})"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"protocol":"sg","agents":[]})"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"protocol":"sg","agents":["a","a"]})"), ScenarioError);
  // parents present iff csg
  CHECK_THROWS_AS(parse_scenario(R"({"protocol":"sg","agents":["a"],"parents":{}})"),
                  ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"protocol":"csg","agents":["a","b"]})"), ScenarioError);
  // bootnodes present iff toychain
  CHECK_THROWS_AS(parse_scenario(R"({"protocol":"toychain","agents":["a"]})"), ScenarioError);
  // groups must be disjoint and cover the agents
  CHECK_THROWS_AS(
      parse_scenario(R"({"protocol":"sg","agents":["a","b"],"groups":[["a"],["a"]]})"),
      ScenarioError);
  CHECK_THROWS_AS(
      parse_scenario(R"({"protocol":"sg","agents":["a","b","c"],"groups":[["a"],["b"]]})"),
      ScenarioError);
  // bounds must be >= 1
  CHECK_THROWS_AS(
      parse_scenario(R"({"protocol":"sg","agents":["a"],"bounds":{"max_date":0}})"),
      ScenarioError);
  // loop_start must index a step
  CHECK_THROWS_AS(parse_scenario(R"({"protocol":"sg","agents":["a"],"loop_start":0})"),
                  ScenarioError);
  // steps referencing unknown agents or unknown ops
  CHECK_THROWS_AS(parse_scenario(R"({"protocol":"sg","agents":["a","b"],
    "steps":[{"kind":"fire","op":"befriend","agents":["a","z"]}]})"),
                  ScenarioError);
  CHECK_THROWS_AS(parse_scenario(R"({"protocol":"sg","agents":["a","b"],
    "steps":[{"kind":"fire","op":"mint","agent":"a","quantity":1,"date":0}]})"),
                  ScenarioError);
  // child ops need a parent entry
  CHECK_THROWS_AS(parse_scenario(R"({"protocol":"csg","agents":["p","q","r","s"],
    "parents":{"r":"p"},
    "steps":[{"kind":"fire","op":"child-befriend","agents":["r","s"]}]})"),
                  ScenarioError);
}

TEST_CASE("replay_script resolves wills and fires against the running configuration") {
  Scenario scenario = parse_scenario(kBefriendScenario);
  ProtocolInstance inst = scenario_instance(scenario);
  ScriptReplay replayed = replay_script(scenario, inst);
  REQUIRE(replayed.ok());
  REQUIRE(replayed.configs.size() == 4);
  CHECK(replayed.fired[2] == sg::befriend_key(AgentId("a"), AgentId("b")));

  // the resolved trace replays identically through the kernel
  ReplayOutcome kernel_view = replay(replayed.trace, inst);
  REQUIRE(kernel_view.ok());
  CHECK(kernel_view.configs == replayed.configs);
}

TEST_CASE("replay_script stops at the first inapplicable step") {
  Scenario scenario = parse_scenario(R"({
    "protocol": "sg",
    "agents": ["a", "b"],
    "steps": [
      {"kind": "will", "agent": "a", "add": [{"op": "befriend", "agents": ["a", "b"]}]},
      {"kind": "fire", "op": "befriend", "agents": ["a", "b"]}
    ]
  })");
  ProtocolInstance inst = scenario_instance(scenario);
  ScriptReplay replayed = replay_script(scenario, inst);
  REQUIRE(!replayed.ok());
  CHECK(*replayed.failed_index == 1);
}

TEST_CASE("cmd_run emits one record per configuration and exit codes per outcome") {
  Scenario scenario = parse_scenario(kBefriendScenario);
  CommandOptions options;
  CommandOutput out = cmd_run(scenario, options);
  CHECK(out.exit_code == kExitPass);
  Json report = parse_json(out.out);
  CHECK(report["records"].size() == 4);
  CHECK(report["failure"].is_null());
  const Json& final_record = report["records"][3];
  CHECK(final_record["state"]["a"]["friends"] == Json::array({"b"}));
  CHECK(final_record["state"]["b"]["friends"] == Json::array({"a"}));
  CHECK(final_record["volition"]["a"].empty());
  CHECK(final_record["enabled"].empty());

  // fire before both wills: exit 1, failure pinned to the step
  Scenario premature = parse_scenario(R"({
    "protocol": "sg",
    "agents": ["a", "b"],
    "steps": [{"kind": "fire", "op": "befriend", "agents": ["a", "b"]}]
  })");
  CommandOutput bad = cmd_run(premature, options);
  CHECK(bad.exit_code == kExitViolation);
  Json bad_report = parse_json(bad.out);
  CHECK(bad_report["failure"]["index"] == 0);

  // no steps: a single-record report
  Scenario idle = parse_scenario(R"({"protocol": "sg", "agents": ["a", "b"]})");
  Json idle_report = parse_json(cmd_run(idle, options).out);
  CHECK(idle_report["records"].size() == 1);
}

TEST_CASE("cmd_check_run: terminal and lasso verdicts with exit codes") {
  CommandOptions options;

  Scenario fulfilled = parse_scenario(kBefriendScenario);
  CHECK(cmd_check_run(fulfilled, options).exit_code == kExitPass);

  Scenario dangling = parse_scenario(R"({
    "protocol": "sg",
    "agents": ["a", "b"],
    "steps": [
      {"kind": "will", "agent": "a", "add": [{"op": "befriend", "agents": ["a", "b"]}]},
      {"kind": "will", "agent": "b", "add": [{"op": "befriend", "agents": ["a", "b"]}]},
      {"kind": "fire", "op": "befriend", "agents": ["a", "b"]},
      {"kind": "will", "agent": "a", "add": [{"op": "unfriend", "agents": ["a", "b"]}]}
    ]
  })");
  CommandOutput out = cmd_check_run(dangling, options);
  CHECK(out.exit_code == kExitViolation);
  Json report = parse_json(out.out);
  CHECK(report["pending"] == Json::array({"unfriend(a,b)"}));

  Scenario lasso = parse_scenario(R"({
    "protocol": "gcb",
    "agents": ["a", "b"],
    "loop_start": 0,
    "steps": [
      {"kind": "fire", "op": "advance", "agent": "a"},
      {"kind": "fire", "op": "advance", "agent": "b"}
    ]
  })");
  CommandOutput lasso_out = cmd_check_run(lasso, options);
  CHECK(lasso_out.exit_code == kExitPass);
  CHECK(parse_json(lasso_out.out)["semantics"] == "lasso");

  Scenario finite = parse_scenario(R"({
    "protocol": "gcb",
    "agents": ["a", "b"],
    "steps": []
  })");
  CommandOutput finite_out = cmd_check_run(finite, options);
  CHECK(finite_out.exit_code == kExitViolation);
  Json finite_report = parse_json(finite_out.out);
  CHECK(finite_report["pending"] == Json::array({"advance(a)", "advance(b)"}));
}

TEST_CASE("cmd_check dispatches and reports budget exhaustion as exit 2") {
  Scenario scenario = parse_scenario(R"({
    "protocol": "sg",
    "agents": ["a", "b"],
    "groups": [["a"], ["b"]]
  })");
  CommandOptions options;
  options.max_steps = 3;

  options.which = "guards";
  CHECK(cmd_check(scenario, options).exit_code == kExitPass);
  options.which = "grassroots";
  CHECK(cmd_check(scenario, options).exit_code == kExitPass);

  options.which = "oblivious";
  options.node_budget = 1;
  CHECK(cmd_check(scenario, options).exit_code == kExitBudget);

  // groups are required for check
  Scenario no_groups = parse_scenario(R"({"protocol":"sg","agents":["a","b"]})");
  options.node_budget = 1'000'000;
  CHECK(cmd_check(no_groups, options).exit_code == kExitInvalidScenario);
}

TEST_CASE("run reports round-trip: records rebuild the scenario and reproduce it") {
  Scenario scenario = parse_scenario(kBefriendScenario);
  CommandOptions options;
  CommandOutput first = cmd_run(scenario, options);
  REQUIRE(first.exit_code == kExitPass);
  Json report = parse_json(first.out);

  // reassemble a scenario from the emitted records' step objects
  Json rebuilt;
  rebuilt["protocol"] = report["protocol"];
  rebuilt["agents"] = report["agents"];
  Json steps = Json::array();
  for (const auto& record : report["records"]) {
    if (!record["step"].is_null()) steps.push_back(record["step"]);
  }
  rebuilt["steps"] = std::move(steps);

  Scenario again = parse_scenario(rebuilt.dump());
  CommandOutput second = cmd_run(again, options);
  CHECK(second.exit_code == kExitPass);
  CHECK(second.out == first.out);
}

TEST_CASE("reports are deterministic and carry the seed") {
  Scenario scenario = parse_scenario(kBefriendScenario);
  CommandOptions options;
  options.seed = 7;
  CommandOutput a = cmd_run(scenario, options);
  CommandOutput b = cmd_run(scenario, options);
  CHECK(a.out == b.out);
  CHECK(parse_json(a.out)["seed"] == 7);

  options.format = "text";
  CommandOutput text = cmd_run(scenario, options);
  CHECK(text.out.find("command: run") != std::string::npos);
  CHECK(cmd_run(scenario, options).out == text.out);
}

TEST_CASE("gcb scripted steps: mint, swap, pay, redeem, advance jumps") {
  Scenario scenario = parse_scenario(R"({
    "protocol": "gcb",
    "agents": ["a", "b"],
    "bounds": {"max_mint_quantity": 3, "max_date": 3, "max_multiset_size": 2},
    "steps": [
      {"kind": "will", "agent": "a", "add": [{"op": "mint", "agent": "a", "quantity": 3, "date": 0}]},
      {"kind": "fire", "op": "mint", "agent": "a", "quantity": 3, "date": 0},
      {"kind": "will", "agent": "b", "add": [{"op": "mint", "agent": "b", "quantity": 1, "date": 2}]},
      {"kind": "fire", "op": "mint", "agent": "b", "quantity": 1, "date": 2},
      {"kind": "will", "agent": "a", "add": [{"op": "swap", "agents": ["a", "b"], "x": [["a", 0, 1]], "y": [["b", 2, 1]]}]},
      {"kind": "will", "agent": "b", "add": [{"op": "swap", "agents": ["a", "b"], "x": [["a", 0, 1]], "y": [["b", 2, 1]]}]},
      {"kind": "fire", "op": "swap", "agents": ["a", "b"], "x": [["a", 0, 1]], "y": [["b", 2, 1]]},
      {"kind": "fire", "op": "advance", "agent": "a", "to": 2},
      {"kind": "will", "agent": "a", "add": [{"op": "pay", "payer": "a", "payee": "b", "bonds": [["b", 2, 1]]}]},
      {"kind": "fire", "op": "pay", "payer": "a", "payee": "b", "bonds": [["b", 2, 1]]},
      {"kind": "will", "agent": "b", "add": [{"op": "redeem", "redeemer": "b", "issuer": "a", "returned": ["a", 0], "taken": ["a", 1]}]}
    ]
  })");
  ProtocolInstance inst = scenario_instance(scenario);
  ScriptReplay replayed = replay_script(scenario, inst);
  CHECK(replayed.ok());
  const auto& final_state =
      std::get<gcb::GcbState>(replayed.configs.back().at(AgentId("b")).machine);
  CHECK(final_state.holdings.count(gcb::Bond{AgentId("b"), 2}) == 1);
  CHECK(final_state.holdings.count(gcb::Bond{AgentId("a"), 0}) == 1);
}
