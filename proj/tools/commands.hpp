#ifndef VMTS_TOOLS_COMMANDS_HPP_
#define VMTS_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "scenario.hpp"
#include "vmts/liveness.hpp"

namespace vmts::cli {

// Exit codes: 0 pass/witness, 1 violation/no-witness, 2 budget exceeded or
// usage error, 3 invalid scenario.
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitInvalidScenario = 3;

struct CommandOptions {
  std::string which = "grassroots";  // check subcommand
  std::optional<Semantics> semantics;
  std::size_t max_steps = 4;
  std::size_t node_budget = 10'000'000;
  std::uint64_t seed = 0;
  std::string format = "json";
};

struct CommandOutput {
  int exit_code = 0;
  std::string out;  // report, already serialized
  std::string err;  // diagnostics
};

CommandOutput cmd_run(const Scenario& scenario, const CommandOptions& options);
CommandOutput cmd_check_run(const Scenario& scenario, const CommandOptions& options);
CommandOutput cmd_check(const Scenario& scenario, const CommandOptions& options);

}  // namespace vmts::cli

#endif  // VMTS_TOOLS_COMMANDS_HPP_
