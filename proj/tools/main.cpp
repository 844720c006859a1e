#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

struct Cli {
  std::string scenario_path;
  vmts::cli::CommandOptions options;
  std::string semantics;
};

void add_common_options(CLI::App* sub, Cli& cli) {
  sub->add_option("scenario", cli.scenario_path, "scenario file (JSON)")->required();
  sub->add_option("--format", cli.options.format, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  sub->add_option("--seed", cli.options.seed, "enumeration tie-breaking seed")
      ->capture_default_str();
  sub->add_option("--max-steps", cli.options.max_steps, "run enumeration depth")
      ->capture_default_str();
  sub->add_option("--node-budget", cli.options.node_budget, "search node budget")
      ->capture_default_str();
  sub->add_option("--semantics", cli.semantics, "liveness semantics for checks")
      ->check(CLI::IsMember({"terminal", "lasso"}));
}

int dispatch(const std::string& name, const Cli& cli) {
  vmts::cli::CommandOptions options = cli.options;
  if (cli.semantics == "terminal") options.semantics = vmts::Semantics::Terminal;
  if (cli.semantics == "lasso") options.semantics = vmts::Semantics::Lasso;

  vmts::cli::Scenario scenario;
  try {
    scenario = vmts::cli::load_scenario(cli.scenario_path);
  } catch (const vmts::cli::ScenarioError& e) {
    std::cerr << "invalid scenario: " << e.what() << "\n";
    return vmts::cli::kExitInvalidScenario;
  }

  vmts::cli::CommandOutput output;
  if (name == "run") {
    output = vmts::cli::cmd_run(scenario, options);
  } else if (name == "check-run") {
    output = vmts::cli::cmd_check_run(scenario, options);
  } else {
    output = vmts::cli::cmd_check(scenario, options);
  }
  std::cout << output.out;
  std::cerr << output.err;
  return output.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"volitional multiagent transition system engine and bounded checker"};
  app.require_subcommand(1);

  Cli cli;
  CLI::App* run = app.add_subcommand("run", "replay a scripted scenario");
  add_common_options(run, cli);
  CLI::App* check_run =
      app.add_subcommand("check-run", "liveness verdict for a scripted scenario");
  add_common_options(check_run, cli);
  CLI::App* check =
      app.add_subcommand("check", "guards/oblivious/interactive/grassroots checks");
  add_common_options(check, cli);
  check
      ->add_option("--which", cli.options.which,
                   "which property to check: guards|oblivious|interactive|grassroots")
      ->check(CLI::IsMember({"guards", "oblivious", "interactive", "grassroots"}))
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return vmts::cli::kExitBudget;  // usage error
  }

  for (CLI::App* sub : {run, check_run, check}) {
    if (sub->parsed()) return dispatch(sub->get_name(), cli);
  }
  return vmts::cli::kExitBudget;
}
