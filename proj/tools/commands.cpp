#include "commands.hpp"

#include "report.hpp"
#include "vmts/liveness.hpp"

namespace vmts::cli {

namespace {

Json report_header(const char* command, const Scenario& scenario,
                   const CommandOptions& options) {
  Json out;
  out["command"] = command;
  out["protocol"] = to_string(scenario.protocol);
  out["agents"] = json_of_agents(scenario.agents);
  out["seed"] = options.seed;
  Json bounds;
  bounds["max_mint_quantity"] = scenario.bounds.max_mint_quantity;
  bounds["max_date"] = scenario.bounds.max_date;
  bounds["max_multiset_size"] = scenario.bounds.max_multiset_size;
  out["bounds"] = std::move(bounds);
  return out;
}

Semantics run_semantics(const Scenario& scenario) {
  return scenario.loop_start ? Semantics::Lasso : Semantics::Terminal;
}

}  // namespace

CommandOutput cmd_run(const Scenario& scenario, const CommandOptions& options) {
  const ProtocolInstance instance = scenario_instance(scenario);
  const ScriptReplay replayed = replay_script(scenario, instance);

  Json report = report_header("run", scenario, options);
  Json records = Json::array();
  for (std::size_t i = 0; i < replayed.configs.size(); ++i) {
    const Configuration& c = replayed.configs[i];
    Json record;
    record["index"] = i;
    record["step"] = i == 0 ? Json(nullptr) : scenario.steps[i - 1];
    record["class"] =
        (i == 0 || !replayed.fired[i - 1]) ? Json(nullptr) : Json(replayed.fired[i - 1]->label());
    record["state"] = json_of_configuration_states(c);
    record["volition"] = json_of_volitions(c);
    record["enabled"] = json_of_keys(instance.enabled_class_set(c));
    records.push_back(std::move(record));
  }
  report["records"] = std::move(records);
  if (replayed.ok()) {
    report["failure"] = nullptr;
  } else {
    Json failure;
    failure["index"] = *replayed.failed_index;
    failure["reason"] = replayed.failure_reason;
    report["failure"] = std::move(failure);
  }

  CommandOutput out;
  out.out = serialize_report(report, options.format);
  out.exit_code = replayed.ok() ? kExitPass : kExitViolation;
  if (!replayed.ok()) {
    out.err = "step " + std::to_string(*replayed.failed_index) +
              " not applicable: " + replayed.failure_reason + "\n";
  }
  return out;
}

CommandOutput cmd_check_run(const Scenario& scenario, const CommandOptions& options) {
  const ProtocolInstance instance = scenario_instance(scenario);
  const Semantics semantics = run_semantics(scenario);

  Json report = report_header("check-run", scenario, options);
  report["semantics"] = to_string(semantics);
  // Finite-run correctness is a chosen reading: terminal treats the final
  // configuration as the whole suffix; lasso treats the loop as repeating.
  report["semantics_note"] =
      semantics == Semantics::Terminal
          ? "terminal: correct iff no class is enabled in the final configuration"
          : "lasso: correct iff every class enabled across the loop fires in it";

  CommandOutput out;
  const ScriptReplay replayed = replay_script(scenario, instance);
  if (!replayed.ok()) {
    report["correct"] = false;
    Json failure;
    failure["index"] = *replayed.failed_index;
    failure["reason"] = replayed.failure_reason;
    report["replay_failure"] = std::move(failure);
    out.out = serialize_report(report, options.format);
    out.err = "replay failed at step " + std::to_string(*replayed.failed_index) + ": " +
              replayed.failure_reason + "\n";
    out.exit_code = kExitViolation;
    return out;
  }
  report["steps"] = replayed.trace.steps.size();

  try {
    const LivenessVerdict verdict = check_run(replayed.trace, instance);
    report["correct"] = verdict.correct;
    report["pending"] = json_of_keys(verdict.pending);
    report["witness_index"] =
        verdict.witness_index ? Json(*verdict.witness_index) : Json(nullptr);
    out.exit_code = verdict.correct ? kExitPass : kExitViolation;
  } catch (const NotALassoError& e) {
    report["correct"] = false;
    report["not_a_lasso"] = e.what();
    out.err = std::string("not a lasso: ") + e.what() + "\n";
    out.exit_code = kExitViolation;
  }
  out.out = serialize_report(report, options.format);
  return out;
}

CommandOutput cmd_check(const Scenario& scenario, const CommandOptions& options) {
  CommandOutput out;
  if (!scenario.groups) {
    out.err = "scenario: 'groups' is required for check\n";
    out.exit_code = kExitInvalidScenario;
    return out;
  }
  const auto& [group_a, group_b] = *scenario.groups;
  const ProtocolSpec spec = scenario_protocol(scenario);
  const ProtocolInstance combined(spec, scenario.agents, scenario.bounds);
  const Semantics semantics = options.semantics.value_or(Semantics::Terminal);
  RunBounds bounds{options.max_steps, scenario.bounds, options.node_budget};

  Json report = report_header("check", scenario, options);
  report["which"] = options.which;
  report["groups"] = Json::array({json_of_agents(group_a), json_of_agents(group_b)});
  report["semantics"] = to_string(semantics);
  report["max_steps"] = options.max_steps;
  report["node_budget"] = options.node_budget;

  if (options.which == "guards") {
    const GuardCheckResult result = guard_check(spec, group_a, group_b, bounds);
    report["verdict"] = result.ok;
    report["configurations_visited"] = result.configurations_visited;
    Json offenders = Json::array();
    for (const auto& gt : result.offenders) {
      Json o;
      o["class"] = combined.class_key_of(gt.txn).label();
      Json participants = Json::array();
      for (const auto& [p, s] : gt.txn.pre) participants.push_back(p.name());
      o["participants"] = std::move(participants);
      o["guard"] = Json::array();
      offenders.push_back(std::move(o));
    }
    report["offenders"] = std::move(offenders);
    report["budget_exceeded"] = result.budget_exceeded;
    out.exit_code = result.budget_exceeded ? kExitBudget
                    : result.ok           ? kExitPass
                                          : kExitViolation;
  } else if (options.which == "oblivious") {
    const ObliviousResult result = check_oblivious(spec, group_a, group_b, bounds, semantics);
    report["verdict"] = result.oblivious;
    report["runs"] = Json::array({result.runs_left, result.runs_right});
    report["interleavings_checked"] = result.interleavings_checked;
    report["nodes"] = result.nodes;
    report["budget_exceeded"] = result.budget_exceeded;
    if (result.counterexample) {
      const auto& cex = *result.counterexample;
      Json c;
      c["left"] = json_of_trace(cex.left, combined);
      c["right"] = json_of_trace(cex.right, combined);
      c["prefix_schedule"] = schedule_string(cex.prefix_schedule);
      c["loop_schedule"] = schedule_string(cex.loop_schedule);
      c["combined"] = json_of_trace(cex.combined, combined);
      c["pending"] = json_of_keys(cex.pending);
      if (cex.replay_failure) {
        Json failure;
        failure["index"] = cex.replay_failure->index;
        failure["reason"] = cex.replay_failure->reason;
        c["replay_failure"] = std::move(failure);
      }
      if (cex.lasso_defect) c["lasso_defect"] = *cex.lasso_defect;
      report["counterexample"] = std::move(c);
    } else {
      report["counterexample"] = nullptr;
    }
    out.exit_code = result.budget_exceeded ? kExitBudget
                    : result.oblivious     ? kExitPass
                                           : kExitViolation;
  } else if (options.which == "interactive") {
    const WitnessResult result =
        find_interactivity_witness(spec, group_a, group_b, bounds, semantics);
    report["witness"] =
        result.witness ? json_of_trace(*result.witness, combined) : Json(nullptr);
    report["cross_class"] =
        result.cross_class ? Json(result.cross_class->label()) : Json(nullptr);
    report["nodes"] = result.nodes;
    report["budget_exceeded"] = result.budget_exceeded;
    out.exit_code = result.witness          ? kExitPass
                    : result.budget_exceeded ? kExitBudget
                                             : kExitViolation;
  } else if (options.which == "grassroots") {
    const GrassrootsResult result =
        check_grassroots(spec, group_a, group_b, bounds, semantics);
    report["verdict"] = result.grassroots;
    report["oblivious"] = result.oblivious.oblivious;
    report["interactive"] = result.interactivity.witness.has_value();
    report["failed"] =
        result.failed_conjunct.empty() ? Json(nullptr) : Json(result.failed_conjunct);
    if (result.interactivity.witness) {
      report["witness"] = json_of_trace(*result.interactivity.witness, combined);
      report["cross_class"] = result.interactivity.cross_class
                                  ? Json(result.interactivity.cross_class->label())
                                  : Json(nullptr);
    } else {
      report["witness"] = nullptr;
      report["cross_class"] = nullptr;
    }
    if (result.oblivious.counterexample) {
      report["counterexample_pending"] =
          json_of_keys(result.oblivious.counterexample->pending);
    }
    const bool budget =
        result.oblivious.budget_exceeded || result.interactivity.budget_exceeded;
    report["budget_exceeded"] = budget;
    out.exit_code = budget               ? kExitBudget
                    : result.grassroots  ? kExitPass
                                         : kExitViolation;
  } else {
    out.err = "unknown check: " + options.which + "\n";
    out.exit_code = kExitBudget;  // usage error
    return out;
  }

  out.out = serialize_report(report, options.format);
  return out;
}

}  // namespace vmts::cli
